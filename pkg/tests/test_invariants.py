from hypothesis import given

from abtaxon.classifier import YES, is_bassian
from abtaxon.dsl import parse_group_expr as P
from abtaxon.invariants import (
    PrimeSet,
    invariant_profile,
    is_elementary,
    p_shape_elem_plus_finite,
    property_p,
    quasi_cyclic_image_primes,
    r0,
    rp,
)
from abtaxon.model import ALEPH0, Cyclic, ZERO, finite, quotient_mod_torsion

from gen import PRIMES, exprs


def test_quasi_cyclic_profile():
    d = invariant_profile(P("Z(2^inf)")).to_json()
    assert d["r0"] == "0" and d["rp"] == {"2": "1"} and d["pruferRanks"] == {"2": "1"}
    assert d["isTorsion"] and not d["isReduced"] and not d["propertyP"]


def test_zero_profile():
    prof = invariant_profile(P("0"))
    assert prof.is_torsion and prof.is_torsion_free and prof.is_elementary and prof.property_p
    assert prof.r0 == ZERO and not prof.rp


def test_mixed_profile():
    # recomputed by hand from the atom tables
    prof = invariant_profile(P("Z + Z(3)^w"))
    assert prof.r0 == finite(1)
    assert prof.rp == {3: ALEPH0}
    assert prof.is_reduced and prof.p_shape_elem_plus_finite == {3: True} and prof.property_p


def test_rp_of_unbounded_is_countable():
    assert rp(P("B(7)"), 7) == ALEPH0
    assert rp(P("B(7)"), 2) == ZERO


def test_rational_has_every_prime():
    s = quasi_cyclic_image_primes(P("Q"))
    assert s.every_prime and 11 in s and not property_p(P("Q"))


def test_finitely_generated_has_p():
    assert property_p(P("Z^5"))
    assert not quasi_cyclic_image_primes(P("Z^5"))


def test_tf_non_free_primes():
    assert quasi_cyclic_image_primes(P("TF(3;2,5)")) == PrimeSet(frozenset({2, 5}))
    assert property_p(P("TF(3)"))


def test_primeset_semantic_equality():
    assert PrimeSet(frozenset({2}), True) == PrimeSet(frozenset(), True)
    assert PrimeSet(frozenset({2})) != PrimeSet(frozenset({3}))
    assert PrimeSet(frozenset({3, 2})).to_json() == [2, 3]
    assert PrimeSet(frozenset(), True).to_json() == "all"


def test_shape_condition():
    assert p_shape_elem_plus_finite(P("Z(2)^w + Z(2^4)^3"), 2)
    assert not p_shape_elem_plus_finite(P("Z(3^2)^w"), 3)
    assert not p_shape_elem_plus_finite(P("B(3)"), 3)
    assert not p_shape_elem_plus_finite(P("Z(5^inf)"), 5)


# properties -------------------------------------------------------------


@given(exprs, exprs)
def test_rank_additivity(a, b):
    assert r0(a + b) == r0(a) + r0(b)
    for p in PRIMES:
        assert rp(a + b, p) == rp(a, p) + rp(b, p)


@given(exprs, exprs)
def test_property_p_compositional(a, b):
    assert property_p(a + b) == (property_p(a) and property_p(b))
    assert quasi_cyclic_image_primes(a + b) == quasi_cyclic_image_primes(a) | quasi_cyclic_image_primes(b)


@given(exprs)
def test_property_p_passes_to_torsion_free_quotient(g):
    if is_bassian(g).value is YES:
        assert property_p(g) == property_p(quotient_mod_torsion(g))


@given(exprs)
def test_elementary_iff_order_p_cyclics(g):
    assert is_elementary(g) == all(isinstance(a, Cyclic) and a.k == 1 for a in g.atoms())


@given(exprs)
def test_shape_monotone_under_removal(g):
    for p in PRIMES:
        if not p_shape_elem_plus_finite(g, p):
            continue
        for drop in g.atoms():
            assert p_shape_elem_plus_finite(g.filter(lambda a: a != drop), p)


@given(exprs)
def test_profile_consistent(g):
    prof = invariant_profile(g)
    assert prof.property_p == (not prof.quasi_cyclic_image_primes)
    assert prof.r0 == r0(g)
    assert prof == invariant_profile(g)
