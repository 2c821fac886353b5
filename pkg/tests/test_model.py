import pytest
from hypothesis import given
from hypothesis import strategies as st

from abtaxon.model import (
    ALEPH0,
    ONE,
    ZERO,
    Cyclic,
    FreeZ,
    GroupExpr,
    Prufer,
    Rational,
    TorsionFreeFR,
    UnboundedDSC,
    ValidationError,
    aleph,
    direct_sum,
    divisible_part,
    finite,
    normalize,
    quotient_mod_torsion,
    reduced_part,
    torsion_subgroup,
)

from gen import cardinals, cardinals0, exprs, raw_terms


def test_merge_by_cardinal_addition():
    g = normalize([(Cyclic(2, 3), finite(2)), (Cyclic(2, 3), finite(3))])
    assert g.terms == ((Cyclic(2, 3), finite(5)),)


def test_aleph_absorbs_finite():
    g = normalize([(FreeZ(), ALEPH0), (FreeZ(), finite(7))])
    assert g.terms == ((FreeZ(), ALEPH0),)


def test_empty_is_zero():
    assert normalize([]).is_zero
    assert str(normalize([])) == "0"


def test_zero_multiplicity_dropped():
    assert normalize([(Rational(), ZERO)]).is_zero


@pytest.mark.parametrize(
    "atom",
    [Cyclic(4, 1), Cyclic(2, 0), Prufer(1), UnboundedDSC(9), TorsionFreeFR(0), TorsionFreeFR(2, (6,))],
)
def test_malformed_atoms_rejected(atom):
    with pytest.raises(ValidationError):
        normalize([(atom, ONE)])


def test_malformed_atom_is_named():
    with pytest.raises(ValidationError, match="4"):
        normalize([(Cyclic(4, 2), ONE)])


def test_canonical_order():
    g = GroupExpr.of(Prufer(2), Rational(), FreeZ(), Cyclic(3), (Cyclic(2, 3), 2), UnboundedDSC(5))
    assert str(g) == "Z(2^3)^2 + Z(3) + B(5) + Z + Q + Z(2^inf)"


def test_direct_sum_examples():
    z3, q = GroupExpr.of((FreeZ(), 3)), GroupExpr.of(Rational())
    assert direct_sum(z3, q).terms == ((FreeZ(), finite(3)), (Rational(), ONE))
    e = GroupExpr.of((Cyclic(2), ALEPH0))
    assert direct_sum(e, GroupExpr.of((Cyclic(2), 5))) == e
    assert direct_sum(e, GroupExpr.zero()) == e


def test_torsion_subgroup_examples():
    g = GroupExpr.of(FreeZ(), Cyclic(3, 2), Rational())
    assert torsion_subgroup(g) == GroupExpr.of(Cyclic(3, 2))
    h = GroupExpr.of(Prufer(5), Cyclic(5))
    assert torsion_subgroup(h) == h
    assert torsion_subgroup(GroupExpr.of((FreeZ(), 3))).is_zero


def test_divisible_and_reduced_examples():
    g = GroupExpr.of((Rational(), 2), Prufer(2), Cyclic(3, 3))
    assert divisible_part(g) == GroupExpr.of((Rational(), 2), Prufer(2))
    assert reduced_part(g) == GroupExpr.of(Cyclic(3, 3))
    assert reduced_part(GroupExpr.of((Prufer(2), ALEPH0))).is_zero
    b = GroupExpr.of(UnboundedDSC(7))
    assert divisible_part(b).is_zero and reduced_part(b) == b


def test_quotient_mod_torsion_examples():
    assert quotient_mod_torsion(GroupExpr.of((FreeZ(), 2), (Cyclic(3), ALEPH0))) == GroupExpr.of((FreeZ(), 2))
    assert quotient_mod_torsion(GroupExpr.of(Prufer(2))).is_zero
    g = GroupExpr.of(Rational(), TorsionFreeFR(2, (3,)))
    assert quotient_mod_torsion(g) == g


def test_cardinal_rendering():
    assert (str(finite(5)), str(ALEPH0), str(aleph(1))) == ("5", "w", "w1")


# invariants -------------------------------------------------------------


@given(raw_terms)
def test_normalize_idempotent(raw):
    g = normalize(raw)
    assert normalize(g.terms) == g


@given(raw_terms)
def test_normal_form_shape(raw):
    g = normalize(raw)
    atoms = g.atoms()
    assert len(set(atoms)) == len(atoms)
    assert all(not m.is_zero for _, m in g.terms)
    keys = [a.sort_key() for a in atoms]
    assert keys == sorted(keys)


@given(raw_terms)
def test_normalize_order_independent(raw):
    assert normalize(raw) == normalize(list(reversed(raw)))


@given(exprs, exprs, exprs)
def test_direct_sum_monoid(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a + GroupExpr.zero() == a


@given(exprs)
def test_divisible_plus_reduced(g):
    assert divisible_part(g) + reduced_part(g) == g


@given(exprs, exprs)
def test_torsion_distributes(a, b):
    assert torsion_subgroup(a + b) == torsion_subgroup(a) + torsion_subgroup(b)


@given(cardinals0, cardinals0, cardinals0)
def test_cardinal_addition_laws(x, y, z):
    assert x + y == y + x
    assert (x + y) + z == x + (y + z)
    assert x + ZERO == x
    assert x + y >= x  # monotone
    if x.infinite or y.infinite:
        assert x + y == max(x, y)


@given(cardinals0, cardinals0, cardinals)
def test_cardinal_addition_monotone(x, y, z):
    if x <= y:
        assert x + z <= y + z


@given(st.integers(0, 3), st.integers(0, 50))
def test_infinite_above_finite(k, n):
    assert aleph(k) > finite(n)
