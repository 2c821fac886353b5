"""Rank and shape invariants of symbolic groups, including property (P).

Property (P) means no quasi-cyclic group Z(p^inf) is an epimorphic image.
It is decided term by term: a direct sum maps onto Z(p^inf) iff some summand
does.  (Every proper subgroup of Z(p^inf) is finite, so two proper images
would generate a finite, hence proper, subgroup.)  Per atom:

* Q maps onto Q/Z, hence onto every Z(p^inf);
* Z(p^inf) is its own image;
* B(p) maps onto Z(p^inf) by sending a generator of order p^k to an element
  of order p^k, compatibly along the chain;
* TF(n;S) does so exactly at the primes of S (a finite-rank torsion-free
  group has (P) iff it is locally free at every prime);
* Z and bounded groups never do.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .model import (
    ALEPH0,
    ZERO,
    Cardinal,
    Cyclic,
    FreeZ,
    GroupExpr,
    Prufer,
    Rational,
    TorsionFreeFR,
    UnboundedDSC,
    cardinal_sum,
    finite,
    require_prime,
)


@dataclass(frozen=True, eq=False)
class PrimeSet:
    """A finite set of primes, optionally flagged as "every prime".

    ``every_prime`` absorbs the explicit members for equality and membership.
    """

    primes: frozenset = frozenset()
    every_prime: bool = False

    def __contains__(self, p) -> bool:
        return self.every_prime or p in self.primes

    def __bool__(self) -> bool:
        return self.every_prime or bool(self.primes)

    def __or__(self, other: PrimeSet) -> PrimeSet:
        return PrimeSet(self.primes | other.primes, self.every_prime or other.every_prime)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PrimeSet):
            return NotImplemented
        if self.every_prime or other.every_prime:
            return self.every_prime == other.every_prime
        return self.primes == other.primes

    def __hash__(self) -> int:
        return hash(True) if self.every_prime else hash(self.primes)

    def to_json(self):
        return "all" if self.every_prime else sorted(self.primes)

    def __str__(self) -> str:
        if self.every_prime:
            return "all primes"
        return "{" + ", ".join(map(str, sorted(self.primes))) + "}"


def _r0_of(atom) -> int:
    if isinstance(atom, (FreeZ, Rational)):
        return 1
    if isinstance(atom, TorsionFreeFR):
        return atom.rank
    return 0


def r0(g: GroupExpr) -> Cardinal:
    """Torsion-free rank."""
    return cardinal_sum(finite(_r0_of(a)) * m for a, m in g.terms)


def rp(g: GroupExpr, p: int) -> Cardinal:
    """p-rank: the dimension of the socle G[p]."""
    require_prime(p)
    total = ZERO
    for a, m in g.terms:
        if isinstance(a, (Cyclic, Prufer)) and a.p == p:
            total = total + m
        elif isinstance(a, UnboundedDSC) and a.p == p:
            total = total + ALEPH0 * m
    return total


def primary_component(g: GroupExpr, p: int) -> GroupExpr:
    require_prime(p)
    return g.filter(lambda a: a.is_torsion and a.p == p)


def p_shape_elem_plus_finite(g: GroupExpr, p: int) -> bool:
    """Whether T_p is (elementary) + (finite)."""
    require_prime(p)
    for a, m in primary_component(g, p).terms:
        if isinstance(a, (Prufer, UnboundedDSC)):
            return False
        if a.k >= 2 and m.infinite:
            return False
    return True


def bounded_at(g: GroupExpr, p: int) -> bool:
    return not any(isinstance(a, (Prufer, UnboundedDSC)) for a in primary_component(g, p).atoms())


def quasi_cyclic_image_primes(g: GroupExpr) -> PrimeSet:
    """Primes p for which Z(p^inf) is an epimorphic image of g."""
    primes = set()
    every = False
    for a, _ in g.terms:
        if isinstance(a, Rational):
            every = True
        elif isinstance(a, (Prufer, UnboundedDSC)):
            primes.add(a.p)
        elif isinstance(a, TorsionFreeFR):
            primes.update(a.non_free_primes)
    if every:
        primes |= g.primes()
    return PrimeSet(frozenset(primes), every)


def property_p(g: GroupExpr) -> bool:
    return not quasi_cyclic_image_primes(g)


def is_torsion(g: GroupExpr) -> bool:
    return all(a.is_torsion for a in g.atoms())


def is_torsion_free(g: GroupExpr) -> bool:
    return not any(a.is_torsion for a in g.atoms())


def is_reduced(g: GroupExpr) -> bool:
    return not any(a.is_divisible for a in g.atoms())


def is_elementary(g: GroupExpr) -> bool:
    return all(isinstance(a, Cyclic) and a.k == 1 for a in g.atoms())


def is_quasi_cyclic(g: GroupExpr) -> bool:
    """Exactly one Z(p^inf) with multiplicity one."""
    return len(g.terms) == 1 and isinstance(g.terms[0][0], Prufer) and g.terms[0][1] == finite(1)


@dataclass(frozen=True)
class InvariantProfile:
    r0: Cardinal
    rp: dict = field(hash=False)
    divisible_rational_rank: Cardinal
    prufer_ranks: dict = field(hash=False)
    is_torsion: bool
    is_torsion_free: bool
    is_reduced: bool
    is_elementary: bool
    bounded_at: dict = field(hash=False)
    p_shape_elem_plus_finite: dict = field(hash=False)
    property_p: bool
    quasi_cyclic_image_primes: PrimeSet

    def to_json(self) -> dict:
        def cmap(d):
            return {str(p): str(v) for p, v in d.items()}

        def bmap(d):
            return {str(p): v for p, v in d.items()}

        return {
            "r0": str(self.r0),
            "rp": cmap(self.rp),
            "divisibleRationalRank": str(self.divisible_rational_rank),
            "pruferRanks": cmap(self.prufer_ranks),
            "isTorsion": self.is_torsion,
            "isTorsionFree": self.is_torsion_free,
            "isReduced": self.is_reduced,
            "isElementary": self.is_elementary,
            "boundedAt": bmap(self.bounded_at),
            "pShapeElemPlusFinite": bmap(self.p_shape_elem_plus_finite),
            "propertyP": self.property_p,
            "quasiCyclicImagePrimes": self.quasi_cyclic_image_primes.to_json(),
        }


def invariant_profile(g: GroupExpr) -> InvariantProfile:
    tprimes = sorted(g.torsion_primes())
    qc = quasi_cyclic_image_primes(g)
    return InvariantProfile(
        r0=r0(g),
        rp={p: rp(g, p) for p in tprimes},
        divisible_rational_rank=g.multiplicity(Rational()),
        prufer_ranks={p: g.multiplicity(Prufer(p)) for p in tprimes if g.multiplicity(Prufer(p)) != ZERO},
        is_torsion=is_torsion(g),
        is_torsion_free=is_torsion_free(g),
        is_reduced=is_reduced(g),
        is_elementary=is_elementary(g),
        bounded_at={p: bounded_at(g, p) for p in tprimes},
        p_shape_elem_plus_finite={p: p_shape_elem_plus_finite(g, p) for p in tprimes},
        property_p=not qc,
        quasi_cyclic_image_primes=qc,
    )
