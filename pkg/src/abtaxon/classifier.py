"""Decision procedures for the Bassian family of properties.

Each predicate returns a :class:`Verdict` carrying the identifier of the
rule that fired.  The generalized Bassian predicates are three-valued: their
characterization is open in general, and inputs outside the decided region
come back ``UNKNOWN`` with the relevant open-problem identifier rather than a
guess.

Two rules for nearly generalized Bassian groups are derived here rather than
taken from the literature, and ``strict=True`` disables them:

``DERIVED-N4``
    A torsion generalized Bassian group has every T_p of the form
    elementary + finite.  A subgroup S_p of such a T_p has pS_p finite, so
    S_p is bounded, hence a direct sum of cyclics with only finitely many
    summands of order above p.  So every subgroup has the same shape and is
    generalized Bassian by the torsion classification.

``DERIVED-N5``
    Subgroups of a torsion-free group of finite rank again have finite rank.
    (Such a group is already Bassian, so this rule is shadowed by
    ``HEREDITARY-BASSIAN`` on every representable input.)
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from . import invariants as inv
from .invariants import InvariantProfile, invariant_profile
from .model import (
    Cyclic,
    GroupExpr,
    Prufer,
    Rational,
    quotient_mod_torsion,
    torsion_subgroup,
)


class Answer(str, enum.Enum):
    YES = "Yes"
    NO = "No"
    UNKNOWN = "Unknown"

    def __str__(self) -> str:
        return self.value


class Citation(str, enum.Enum):
    MAIN_THM_I = "MAIN-THM-I"
    MAIN_THM_II = "MAIN-THM-II"
    PROP_1 = "PROP-1"
    COR_2 = "COR-2"
    PROP_3 = "PROP-3"
    THM_SUPER = "THM-SUPER"
    GB_BASSIAN = "GB-BASSIAN"
    GB_FINITE_RANK = "GB-FINITE-RANK"
    PROP_DIVNEAR = "PROP-DIVNEAR"
    GB_TORSION_SHAPE = "GB-TORSION-SHAPE"
    THM_210 = "THM-210"
    PROP_REDNEAR = "PROP-REDNEAR"
    COR_212 = "COR-212"
    THM_CHIEF = "THM-CHIEF"
    HEREDITARY_BASSIAN = "HEREDITARY-BASSIAN"
    DERIVED_N4 = "DERIVED-N4"
    DERIVED_N5 = "DERIVED-N5"
    PROBLEM_1 = "PROBLEM-1"
    PROBLEM_2 = "PROBLEM-2"
    PROBLEM_3 = "PROBLEM-3"
    HEREDITARY_GB_OPEN = "HEREDITARY-GB-OPEN"

    def __str__(self) -> str:
        return self.value


OPEN_PROBLEMS = frozenset(
    {Citation.PROBLEM_1, Citation.PROBLEM_2, Citation.PROBLEM_3, Citation.HEREDITARY_GB_OPEN}
)
DERIVED_RULES = frozenset({Citation.DERIVED_N4, Citation.DERIVED_N5})

YES, NO, UNKNOWN = Answer.YES, Answer.NO, Answer.UNKNOWN


@dataclass(frozen=True)
class Verdict:
    value: Answer
    citation: Citation
    detail: str = field(default="", compare=True)

    def __post_init__(self):
        if self.value is UNKNOWN and self.citation not in OPEN_PROBLEMS:
            raise ValueError(f"Unknown verdict must cite an open problem, got {self.citation}")

    def __bool__(self) -> bool:
        raise TypeError("a Verdict is three-valued; compare .value instead")

    def to_json(self) -> dict:
        return {"value": self.value.value, "citation": self.citation.value, "detail": self.detail}


class PreconditionError(ValueError):
    """A necessary condition for generalized Bassian groups fails."""

    def __init__(self, condition: str):
        super().__init__(condition)
        self.condition = condition


def _has_prufer(g: GroupExpr) -> bool:
    return any(isinstance(a, Prufer) for a in g.atoms())


def _infinite_rank_witness(g: GroupExpr):
    """First offending rank for the Bassian test, or None."""
    r0 = inv.r0(g)
    if r0.infinite:
        return f"r0 = {r0} is infinite"
    for p in sorted(g.torsion_primes()):
        rp = inv.rp(g, p)
        if rp.infinite:
            return f"r_{p} = {rp} is infinite"
    return None


def is_bassian(g: GroupExpr) -> Verdict:
    """Reduced: all ranks finite.  Non-reduced: finite Q^n plus reduced Bassian."""
    if inv.is_reduced(g):
        why = _infinite_rank_witness(g)
        if why:
            return Verdict(NO, Citation.MAIN_THM_I, why)
        return Verdict(YES, Citation.MAIN_THM_I, "reduced with r0 and every r_p finite")
    if _has_prufer(g):
        p = next(a.p for a in g.atoms() if isinstance(a, Prufer))
        return Verdict(NO, Citation.MAIN_THM_II, f"divisible part contains Z({p}^inf), not a Q-vector space")
    q = g.multiplicity(Rational())
    if q.infinite:
        return Verdict(NO, Citation.MAIN_THM_II, f"divisible part Q^{q} is not finite dimensional")
    why = _infinite_rank_witness(g.filter(lambda a: not isinstance(a, Rational)))
    if why:
        return Verdict(NO, Citation.MAIN_THM_II, f"reduced part not Bassian: {why}")
    return Verdict(YES, Citation.MAIN_THM_II, f"Q^{q} plus a reduced Bassian group")


def is_hereditarily_bassian(g: GroupExpr) -> Verdict:
    b = is_bassian(g)
    return Verdict(b.value, Citation.COR_2, f"hereditarily Bassian iff Bassian; {b.detail}")


def is_hereditarily_hopfian(g: GroupExpr) -> Verdict:
    b = is_bassian(g)
    return Verdict(b.value, Citation.PROP_1, f"hereditarily Hopfian iff Bassian; {b.detail}")


def is_nearly_bassian(g: GroupExpr) -> Verdict:
    if inv.is_quasi_cyclic(g):
        return Verdict(YES, Citation.PROP_3, "quasi-cyclic: every proper subgroup is finite")
    b = is_bassian(g)
    if b.value is YES:
        return Verdict(YES, Citation.PROP_3, "Bassian, and subgroups of Bassian groups are Bassian")
    return Verdict(NO, Citation.PROP_3, f"neither Z(p^inf) nor Bassian ({b.detail})")


def is_super_bassian(g: GroupExpr) -> Verdict:
    b = is_bassian(g)
    if inv.is_torsion(g):
        if b.value is NO:
            return Verdict(NO, Citation.THM_SUPER, f"torsion case: not Bassian ({b.detail})")
        if not inv.is_reduced(g):
            return Verdict(NO, Citation.THM_SUPER, "torsion case: not reduced")
        return Verdict(YES, Citation.THM_SUPER, "torsion case: reduced Bassian")
    case = "torsion-free" if inv.is_torsion_free(g) else "mixed"
    if b.value is NO:
        return Verdict(NO, Citation.THM_SUPER, f"{case} case: not Bassian ({b.detail})")
    qc = inv.quasi_cyclic_image_primes(g)
    if qc:
        return Verdict(NO, Citation.THM_SUPER, f"{case} case: maps onto Z(p^inf) for p in {qc}")
    return Verdict(YES, Citation.THM_SUPER, f"{case} case: Bassian with property (P)")


def is_generalized_bassian(g: GroupExpr) -> Verdict:
    """First matching rule wins; see the module docstring for the vocabulary."""
    if is_bassian(g).value is YES:
        return Verdict(YES, Citation.GB_BASSIAN, "Bassian groups are generalized Bassian")
    r0 = inv.r0(g)
    if r0.infinite:
        return Verdict(NO, Citation.GB_FINITE_RANK, f"torsion-free rank {r0} is infinite")
    if _has_prufer(g):
        return Verdict(NO, Citation.PROP_DIVNEAR, "has a quasi-cyclic summand, which is not generalized Bassian")
    for p in sorted(g.torsion_primes()):
        if not inv.p_shape_elem_plus_finite(g, p):
            return Verdict(NO, Citation.GB_TORSION_SHAPE, f"T_{p} is not elementary + finite")
    if inv.is_torsion(g):
        return Verdict(YES, Citation.THM_210, "torsion with every T_p elementary + finite")
    if inv.is_torsion_free(g):
        return Verdict(YES, Citation.PROP_REDNEAR, "torsion-free of finite rank")
    if inv.is_reduced(g):
        t = is_generalized_bassian(torsion_subgroup(g))
        f = is_generalized_bassian(quotient_mod_torsion(g))
        if t.value is YES and f.value is YES:
            return Verdict(YES, Citation.COR_212, "split mixed with reduced generalized Bassian parts")
    return Verdict(
        UNKNOWN,
        Citation.PROBLEM_2,
        "elementary + non-reduced Bassian summand; open (see also Problem 3)",
    )


def is_nearly_generalized_bassian(g: GroupExpr, strict: bool = False) -> Verdict:
    if inv.is_quasi_cyclic(g):
        return Verdict(YES, Citation.THM_CHIEF, "quasi-cyclic: every proper subgroup is finite")
    if is_bassian(g).value is YES:
        return Verdict(YES, Citation.HEREDITARY_BASSIAN, "subgroups of a Bassian group are Bassian")
    gb = is_generalized_bassian(g)
    if gb.value is NO:
        return Verdict(NO, Citation.THM_CHIEF, f"neither quasi-cyclic nor generalized Bassian ({gb.detail})")
    if not strict and gb.value is YES:
        if inv.is_torsion(g):
            return Verdict(YES, Citation.DERIVED_N4, "subgroups keep the elementary + finite shape")
        if inv.is_torsion_free(g):
            return Verdict(YES, Citation.DERIVED_N5, "subgroups keep finite torsion-free rank")
    return Verdict(
        UNKNOWN,
        Citation.HEREDITARY_GB_OPEN,
        "whether subgroups of generalized Bassian groups are generalized Bassian is open",
    )


def extract_elementary_plus_bassian(g: GroupExpr):
    """Split g as E + H with E elementary and H Bassian.

    E takes every Z(p) summand, so H has no summand of order p.
    Raises :class:`PreconditionError` when g cannot be generalized Bassian.
    """
    r0 = inv.r0(g)
    if r0.infinite:
        raise PreconditionError(f"r0 = {r0} is infinite")
    for a in g.atoms():
        if isinstance(a, Prufer):
            raise PreconditionError(f"quasi-cyclic summand {a}")
    for p in sorted(g.torsion_primes()):
        if not inv.p_shape_elem_plus_finite(g, p):
            raise PreconditionError(f"T_{p} not elementary ⊕ finite")
    elementary = g.filter(lambda a: isinstance(a, Cyclic) and a.k == 1)
    rest = g.filter(lambda a: not (isinstance(a, Cyclic) and a.k == 1))
    return elementary, rest


PREDICATES = (
    ("bassian", is_bassian),
    ("hereditarilyBassian", is_hereditarily_bassian),
    ("hereditarilyHopfian", is_hereditarily_hopfian),
    ("nearlyBassian", is_nearly_bassian),
    ("superBassian", is_super_bassian),
    ("generalizedBassian", is_generalized_bassian),
    ("nearlyGeneralizedBassian", is_nearly_generalized_bassian),
)


@dataclass(frozen=True)
class ClassificationReport:
    group: GroupExpr
    profile: InvariantProfile
    verdicts: tuple  # ((name, Verdict), ...) in PREDICATES order
    strict: bool = False

    def __getitem__(self, name: str) -> Verdict:
        for k, v in self.verdicts:
            if k == name:
                return v
        raise KeyError(name)


def explain(g: GroupExpr, strict: bool = False) -> ClassificationReport:
    verdicts = []
    for name, fn in PREDICATES:
        if fn is is_nearly_generalized_bassian:
            verdicts.append((name, fn(g, strict=strict)))
        else:
            verdicts.append((name, fn(g)))
    return ClassificationReport(g, invariant_profile(g), tuple(verdicts), strict)
