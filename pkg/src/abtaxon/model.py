"""Symbolic abelian groups: cardinals, atoms and normalized direct sums.

A :class:`GroupExpr` is a finite formal direct sum of atoms, each carrying a
cardinal multiplicity.  Six atom kinds are representable::

    Z          FreeZ()                     infinite cyclic
    Q          Rational()                  the rationals
    Z(p^k)     Cyclic(p, k)                cyclic of order p^k
    Z(p^inf)   Prufer(p)                   quasi-cyclic
    B(p)       UnboundedDSC(p)             one Z(p^k) for every k >= 1
    TF(n;S)    TorsionFreeFR(n, S)         reduced torsion-free of rank n,
                                           localization non-free exactly at S

Only split groups are expressible, so the torsion subgroup is always a
summand and ``G/T(G)`` is the torsion-free part.  All values are immutable.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Union

from sympy import factorint, isprime


class ValidationError(ValueError):
    """A malformed atom, multiplicity or prime argument."""


@lru_cache(maxsize=4096)
def is_prime(n: int) -> bool:
    return n >= 2 and bool(isprime(n))


def factorization_hint(n: int) -> str:
    if n < 2:
        return f"{n} has no prime factors"
    parts = [f"{p}^{e}" if e > 1 else str(p) for p, e in sorted(factorint(n).items())]
    return f"{n} = {' * '.join(parts)}"


def require_prime(p, what: str = "p") -> int:
    if isinstance(p, bool) or not isinstance(p, int) or not is_prime(p):
        hint = factorization_hint(p) if isinstance(p, int) and not isinstance(p, bool) else ""
        msg = f"{what}={p!r} is not prime"
        raise ValidationError(f"{msg} ({hint})" if hint else msg)
    return p


# --------------------------------------------------------------------------
# Cardinals


@dataclass(frozen=True, order=True)
class Cardinal:
    """A finite natural number or an aleph.

    Ordering compares ``infinite`` first, so every finite cardinal lies below
    every aleph.  Use :func:`finite` and :func:`aleph` to build values.
    """

    infinite: bool
    value: int

    def __post_init__(self):
        if isinstance(self.value, bool) or not isinstance(self.value, int) or self.value < 0:
            raise ValidationError(f"cardinal index must be a natural number, got {self.value!r}")

    @property
    def is_finite(self) -> bool:
        return not self.infinite

    @property
    def is_zero(self) -> bool:
        return not self.infinite and self.value == 0

    def __add__(self, other: Cardinal) -> Cardinal:
        if not isinstance(other, Cardinal):
            return NotImplemented
        if self.infinite or other.infinite:
            return max(self, other)
        return Cardinal(False, self.value + other.value)

    def __mul__(self, other: Cardinal) -> Cardinal:
        if not isinstance(other, Cardinal):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return ZERO
        if self.infinite or other.infinite:
            return max(self, other)
        return Cardinal(False, self.value * other.value)

    def __str__(self) -> str:
        if not self.infinite:
            return str(self.value)
        return "w" if self.value == 0 else f"w{self.value}"

    def __repr__(self) -> str:
        return f"Aleph({self.value})" if self.infinite else f"Finite({self.value})"


def finite(n: int) -> Cardinal:
    return Cardinal(False, n)


def aleph(k: int = 0) -> Cardinal:
    return Cardinal(True, k)


ZERO = finite(0)
ONE = finite(1)
ALEPH0 = aleph(0)


def cardinal_sum(values: Iterable[Cardinal]) -> Cardinal:
    total = ZERO
    for v in values:
        total = total + v
    return total


# --------------------------------------------------------------------------
# Atoms
#
# Canonical kind order: reduced torsion, reduced torsion-free, divisible.


@dataclass(frozen=True)
class Cyclic:
    p: int
    k: int = 1

    kind = 0
    is_torsion = True
    is_divisible = False

    def validate(self) -> None:
        require_prime(self.p)
        if isinstance(self.k, bool) or not isinstance(self.k, int) or self.k < 1:
            raise ValidationError(f"{self}: exponent must be >= 1")

    def sort_key(self):
        return (self.kind, self.p, self.k, ())

    def __str__(self) -> str:
        return f"Z({self.p})" if self.k == 1 else f"Z({self.p}^{self.k})"


@dataclass(frozen=True)
class UnboundedDSC:
    """The unbounded direct sum of Z(p^k), one summand per k >= 1."""

    p: int

    kind = 1
    is_torsion = True
    is_divisible = False

    def validate(self) -> None:
        require_prime(self.p)

    def sort_key(self):
        return (self.kind, self.p, 0, ())

    def __str__(self) -> str:
        return f"B({self.p})"


@dataclass(frozen=True)
class FreeZ:
    kind = 2
    is_torsion = False
    is_divisible = False

    def validate(self) -> None:
        pass

    def sort_key(self):
        return (self.kind, 0, 1, ())

    def __str__(self) -> str:
        return "Z"


@dataclass(frozen=True)
class TorsionFreeFR:
    """Reduced torsion-free group of finite rank.

    ``non_free_primes`` lists the primes p at which the localization is not
    a free Z_(p)-module.  ``TorsionFreeFR(1, ())`` is isomorphic to Z but is
    never rewritten to :class:`FreeZ`.
    """

    rank: int
    non_free_primes: tuple = field(default=())

    kind = 3
    is_torsion = False
    is_divisible = False

    def __post_init__(self):
        try:
            primes = tuple(sorted(set(self.non_free_primes)))
        except TypeError:
            raise ValidationError(f"non-free primes must be integers, got {self.non_free_primes!r}")
        object.__setattr__(self, "non_free_primes", primes)

    def validate(self) -> None:
        if isinstance(self.rank, bool) or not isinstance(self.rank, int) or self.rank < 1:
            raise ValidationError(f"{self}: rank must be >= 1")
        for p in self.non_free_primes:
            require_prime(p, what=f"non-free prime of {self}")

    def sort_key(self):
        return (self.kind, 0, self.rank, self.non_free_primes)

    def __str__(self) -> str:
        if not self.non_free_primes:
            return f"TF({self.rank})"
        return f"TF({self.rank};{','.join(map(str, self.non_free_primes))})"


@dataclass(frozen=True)
class Rational:
    kind = 4
    is_torsion = False
    is_divisible = True

    def validate(self) -> None:
        pass

    def sort_key(self):
        return (self.kind, 0, 0, ())

    def __str__(self) -> str:
        return "Q"


@dataclass(frozen=True)
class Prufer:
    p: int

    kind = 5
    is_torsion = True
    is_divisible = True

    def validate(self) -> None:
        require_prime(self.p)

    def sort_key(self):
        return (self.kind, self.p, 0, ())

    def __str__(self) -> str:
        return f"Z({self.p}^inf)"


Atom = Union[Cyclic, UnboundedDSC, FreeZ, TorsionFreeFR, Rational, Prufer]
ATOM_TYPES = (Cyclic, UnboundedDSC, FreeZ, TorsionFreeFR, Rational, Prufer)


def atom_prime(atom: Atom):
    """The prime of a torsion atom, else ``None``."""
    return getattr(atom, "p", None)


# --------------------------------------------------------------------------
# Group expressions


@dataclass(frozen=True)
class GroupExpr:
    """A normalized direct sum.  Build through :func:`normalize`."""

    terms: tuple = ()

    @classmethod
    def zero(cls) -> GroupExpr:
        return cls(())

    @classmethod
    def of(cls, *terms) -> GroupExpr:
        """``GroupExpr.of(Cyclic(2), (FreeZ(), 3), (Rational(), aleph()))``"""
        raw = []
        for t in terms:
            if isinstance(t, tuple):
                atom, mult = t
                raw.append((atom, mult if isinstance(mult, Cardinal) else finite(mult)))
            else:
                raw.append((t, ONE))
        return normalize(raw)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def atoms(self):
        return [a for a, _ in self.terms]

    def multiplicity(self, atom: Atom) -> Cardinal:
        for a, m in self.terms:
            if a == atom:
                return m
        return ZERO

    def primes(self) -> frozenset:
        """Primes occurring in torsion atoms or as non-free primes."""
        out = set()
        for a, _ in self.terms:
            if isinstance(a, TorsionFreeFR):
                out.update(a.non_free_primes)
            elif atom_prime(a) is not None:
                out.add(a.p)
        return frozenset(out)

    def torsion_primes(self) -> frozenset:
        return frozenset(a.p for a, _ in self.terms if a.is_torsion)

    def filter(self, pred) -> GroupExpr:
        return GroupExpr(tuple((a, m) for a, m in self.terms if pred(a)))

    def __add__(self, other: GroupExpr) -> GroupExpr:
        if not isinstance(other, GroupExpr):
            return NotImplemented
        return direct_sum(self, other)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(str(a) if m == ONE else f"{a}^{m}" for a, m in self.terms)


def normalize(raw: Iterable) -> GroupExpr:
    """Merge equal atoms by cardinal addition, drop zeros, sort canonically."""
    merged: dict = {}
    for atom, mult in raw:
        if not isinstance(atom, ATOM_TYPES):
            raise ValidationError(f"not an atom: {atom!r}")
        if not isinstance(mult, Cardinal):
            raise ValidationError(f"multiplicity of {atom} must be a Cardinal, got {mult!r}")
        atom.validate()
        merged[atom] = merged.get(atom, ZERO) + mult
    terms = sorted(
        ((a, m) for a, m in merged.items() if not m.is_zero),
        key=lambda t: t[0].sort_key(),
    )
    return GroupExpr(tuple(terms))


def direct_sum(a: GroupExpr, b: GroupExpr) -> GroupExpr:
    return normalize(a.terms + b.terms)


def torsion_subgroup(g: GroupExpr) -> GroupExpr:
    return g.filter(lambda a: a.is_torsion)


def quotient_mod_torsion(g: GroupExpr) -> GroupExpr:
    # split model: G/T(G) is the torsion-free part
    return g.filter(lambda a: not a.is_torsion)


def divisible_part(g: GroupExpr) -> GroupExpr:
    return g.filter(lambda a: a.is_divisible)


def reduced_part(g: GroupExpr) -> GroupExpr:
    return g.filter(lambda a: not a.is_divisible)
