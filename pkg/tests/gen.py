"""Random group expressions, shared by the property and acceptance tests."""

import random

from hypothesis import strategies as st

from abtaxon.model import (
    Cyclic,
    FreeZ,
    GroupExpr,
    Prufer,
    Rational,
    TorsionFreeFR,
    UnboundedDSC,
    aleph,
    finite,
    normalize,
)

PRIMES = (2, 3, 5, 7)


def random_atom(rng: random.Random):
    kind = rng.choice("CCCBZTQP")
    p = rng.choice(PRIMES)
    if kind == "C":
        return Cyclic(p, rng.randint(1, 4))
    if kind == "B":
        return UnboundedDSC(p)
    if kind == "Z":
        return FreeZ()
    if kind == "T":
        return TorsionFreeFR(rng.randint(1, 3), tuple(sorted(rng.sample(PRIMES, rng.randint(0, 2)))))
    if kind == "Q":
        return Rational()
    return Prufer(p)


def random_mult(rng: random.Random):
    r = rng.random()
    if r < 0.7:
        return finite(rng.randint(1, 5))
    return aleph(0 if r < 0.95 else 1)


def random_expr(rng: random.Random, max_terms: int = 4) -> GroupExpr:
    return normalize([(random_atom(rng), random_mult(rng)) for _ in range(rng.randint(0, max_terms))])


def random_exprs(n: int, seed: int = 7):
    rng = random.Random(seed)
    return [random_expr(rng) for _ in range(n)]


# hypothesis strategies ------------------------------------------------------

primes = st.sampled_from(PRIMES)

atoms = st.one_of(
    st.builds(Cyclic, primes, st.integers(1, 4)),
    st.builds(UnboundedDSC, primes),
    st.just(FreeZ()),
    st.builds(
        TorsionFreeFR,
        st.integers(1, 3),
        st.lists(primes, max_size=2, unique=True).map(lambda xs: tuple(sorted(xs))),
    ),
    st.just(Rational()),
    st.builds(Prufer, primes),
)

cardinals = st.one_of(st.integers(1, 6).map(finite), st.integers(0, 2).map(aleph))
cardinals0 = st.one_of(st.integers(0, 6).map(finite), st.integers(0, 2).map(aleph))

raw_terms = st.lists(st.tuples(atoms, cardinals0), max_size=5)
exprs = raw_terms.map(normalize)
