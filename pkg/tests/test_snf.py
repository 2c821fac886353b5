from itertools import combinations
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from abtaxon.oracle.snf import IntegerMatrix, invariant_factors, smith_normal_form


def determinantal_divisors(a: IntegerMatrix) -> list:
    """Independent oracle: d_k = gcd of all k x k minors; SNF diagonal is d_k / d_{k-1}."""
    out, prev = [], 1
    for k in range(1, min(a.rows, a.cols) + 1):
        g = 0
        for rs in combinations(range(a.rows), k):
            for cs in combinations(range(a.cols), k):
                minor = IntegerMatrix.from_rows([[a[i, j] for j in cs] for i in rs])
                g = gcd(g, minor.determinant())
        if g == 0:
            out.extend([0] * (min(a.rows, a.cols) - len(out)))
            break
        out.append(g // prev)
        prev = g
    return out


def check(a: IntegerMatrix):
    r = smith_normal_form(a)
    assert r.u @ a @ r.v == r.s
    assert abs(r.u.determinant()) == 1 and abs(r.v.determinant()) == 1
    assert r.s.is_diagonal()
    d = r.s.diagonal()
    assert all(x >= 0 for x in d)
    assert all(d[i + 1] % d[i] == 0 if d[i] else d[i + 1] == 0 for i in range(len(d) - 1))
    return d


def test_example_2x2():
    # frozen from the determinantal-divisor oracle: d1 = 2, d1 * d2 = |det| = 8
    a = IntegerMatrix.from_rows([[2, 4], [6, 8]])
    assert determinantal_divisors(a) == [2, 4]
    assert check(a) == (2, 4)


def test_identity_and_zero():
    assert check(IntegerMatrix.identity(3)) == (1, 1, 1)
    assert check(IntegerMatrix.from_rows([[0]])) == (0,)


def test_rectangular():
    a = IntegerMatrix.from_rows([[4, 0], [0, 2], [0, 0]])
    assert check(a) == (2, 4)
    assert invariant_factors(a.entries, 2) == [2, 4]


def test_shape_validation():
    with pytest.raises(ValueError):
        IntegerMatrix(2, 2, ((1, 2),))


def test_exact_big_entries():
    big = 10**40
    a = IntegerMatrix.from_rows([[big, 0], [0, big * 3]])
    assert check(a) == (big, 3 * big)


matrices = st.integers(1, 6).flatmap(
    lambda m: st.integers(1, 6).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(-50, 50), min_size=n, max_size=n), min_size=m, max_size=m
        ).map(lambda rows: IntegerMatrix.from_rows(rows, n))
    )
)


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_snf_valid(a):
    d = check(a)
    assert list(invariant_factors(a.entries, a.cols)) == list(d)


@settings(max_examples=40, deadline=None)
@given(matrices.filter(lambda a: a.rows <= 4 and a.cols <= 4))
def test_snf_matches_determinantal_divisors(a):
    assert list(smith_normal_form(a).s.diagonal()) == determinantal_divisors(a)


def test_pivot_policy_deterministic():
    a = IntegerMatrix.from_rows([[6, 4], [4, 6]])
    assert smith_normal_form(a) == smith_normal_form(a)
