"""Homomorphisms between finite abelian groups.

A homomorphism a -> b is fixed by the images of a's cyclic generators; the
image of a generator of order m may be any y in b with m*y = 0.
"""

from __future__ import annotations

from itertools import product
from math import gcd, prod
from typing import Iterator

from .finite import DEFAULT_BUDGET, FiniteAbelianGroup, check_budget


def count_homs(a: FiniteAbelianGroup, b: FiniteAbelianGroup) -> int:
    """|Hom(a, b)| as the product of gcds over pairs of cyclic factors."""
    return prod(gcd(m, n) for m in a.orders for n in b.orders)


def image_candidates(m: int, b: FiniteAbelianGroup) -> list:
    """Codes of all y in b with m*y = 0, by scanning b."""
    order = b.tables.order
    return [c for c in range(b.order) if m % order[c] == 0]


def enumerate_homs(a: FiniteAbelianGroup, b: FiniteAbelianGroup) -> Iterator[tuple]:
    """Yield each homomorphism as the tuple of generator images (elements of b)."""
    lists = [[b.decode(c) for c in image_candidates(m, b)] for m in a.orders]
    yield from product(*lists)


def enumeration_size(a: FiniteAbelianGroup, b: FiniteAbelianGroup) -> int:
    """Length of :func:`enumerate_homs` without walking it."""
    return prod(len(image_candidates(m, b)) for m in a.orders)


def evaluate(a: FiniteAbelianGroup, b: FiniteAbelianGroup, images, x) -> tuple:
    """Image of the element x of a under the hom with generator ``images``."""
    out = b.zero()
    for coeff, y in zip(x, images):
        out = b.add(out, b.scale(coeff, y))
    return out


def is_homomorphism(a: FiniteAbelianGroup, b: FiniteAbelianGroup, images) -> bool:
    """Check additivity of the induced element map over all pairs (small groups)."""
    elems = list(a.elements())
    table = {x: evaluate(a, b, images, x) for x in elems}
    return all(table[a.add(x, y)] == b.add(table[x], table[y]) for x in elems for y in elems)


def kernel_is_trivial(a: FiniteAbelianGroup, b: FiniteAbelianGroup, images) -> bool:
    zero = b.zero()
    return sum(1 for x in a.elements() if evaluate(a, b, images, x) == zero) == 1


def find_injection(a: FiniteAbelianGroup, b: FiniteAbelianGroup, budget: int = DEFAULT_BUDGET):
    """Generator images of some injective hom a -> b, or None.

    Backtracks over generator images; a partial assignment is kept only
    while the map stays injective on the subgroup generated so far.
    """
    check_budget(a.order, budget)
    if a.order > b.order:
        return None  # no injection into a smaller set
    add, order = b.tables.add, b.tables.order
    gen_orders = list(a.orders)
    # largest generators first prunes hardest
    idx = sorted(range(len(gen_orders)), key=lambda i: -gen_orders[i])
    cands = {m: [c for c in range(b.order) if order[c] == m] for m in set(gen_orders)}
    chosen = [0] * len(gen_orders)
    # what remains depends only on the depth and the image generated so far
    dead = set()

    def search(depth: int, image: frozenset):
        if depth == len(idx):
            return True
        if (depth, image) in dead:
            return False
        i = idx[depth]
        m = gen_orders[i]
        for y in cands[m]:
            multiples = [0]
            for _ in range(m - 1):
                multiples.append(add[multiples[-1]][y])
            # injective on the enlarged subgroup iff <y> meets the image trivially
            if any(k in image for k in multiples[1:]):
                continue
            grown = {add[s][k] for s in image for k in multiples}
            chosen[i] = y
            if search(depth + 1, frozenset(grown)):
                return True
        dead.add((depth, image))
        return False

    if not search(0, frozenset({0})):
        return None
    images = tuple(b.decode(c) for c in chosen)
    if not kernel_is_trivial(a, b, images):  # full-domain confirmation
        raise AssertionError(f"injection search produced a non-injective map {a} -> {b}")
    return images


def exists_injection(a: FiniteAbelianGroup, b: FiniteAbelianGroup, budget: int = DEFAULT_BUDGET) -> bool:
    return find_injection(a, b, budget) is not None


def conjugate(partition) -> tuple:
    parts = sorted(partition, reverse=True)
    if not parts:
        return ()
    return tuple(sum(1 for x in parts if x > i) for i in range(parts[0]))


def embedding_criterion(a: FiniteAbelianGroup, b: FiniteAbelianGroup) -> bool:
    """Per prime, pointwise dominance of conjugate exponent partitions.

    Conjectural shortcut for :func:`exists_injection`; trusted only once the
    exhaustive comparison job agrees.
    """
    for p in a.primes():
        ca, cb = conjugate(a.partition(p)), conjugate(b.partition(p))
        if len(ca) > len(cb) or any(x > y for x, y in zip(ca, cb)):
            return False
    return True
