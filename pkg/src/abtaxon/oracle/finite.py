"""Finite abelian groups in elementary-divisor form.

A group is stored as a sorted tuple of ``(p, k)`` pairs, one cyclic factor
Z/p^k each.  Elements are tuples of residues, one per factor, in that order.
Internally elements are also encoded as integers in mixed radix (first
factor least significant) so that subgroups can be held as frozensets of
small ints.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product
from math import gcd, lcm, prod
from typing import Iterator, Sequence

import numpy as np
from sympy import divisors, factorint

from ..model import require_prime
from .snf import invariant_factors

DEFAULT_BUDGET = 512


class BudgetExceededError(RuntimeError):
    def __init__(self, order: int, budget: int):
        super().__init__(f"group order {order} exceeds the enumeration budget {budget}")
        self.order = order
        self.budget = budget


def budget_ceiling() -> int:
    """The configured maximum budget (``ABTAXON_MAX_ORDER`` overrides)."""
    raw = os.environ.get("ABTAXON_MAX_ORDER")
    return int(raw) if raw else DEFAULT_BUDGET


def check_budget(order: int, budget: int = None) -> None:
    budget = budget_ceiling() if budget is None else budget
    if order > budget:
        raise BudgetExceededError(order, budget)


@dataclass(frozen=True)
class FiniteAbelianGroup:
    elementary_divisors: tuple = ()

    def __post_init__(self):
        divs = tuple(sorted((int(p), int(k)) for p, k in self.elementary_divisors))
        for p, k in divs:
            require_prime(p)
            if k < 1:
                raise ValueError(f"exponent of Z/{p}^{k} must be >= 1")
        object.__setattr__(self, "elementary_divisors", divs)

    @classmethod
    def from_cyclic_orders(cls, orders: Sequence[int]) -> FiniteAbelianGroup:
        """Group iso to the sum of Z/n over ``orders`` (n = 1 and n = 0 are skipped)."""
        divs = []
        for n in orders:
            if n == 0:
                raise ValueError("Z/0 is not finite")
            divs.extend(_prime_powers(abs(n)))
        return cls(tuple(divs))

    @classmethod
    def parse(cls, text: str) -> FiniteAbelianGroup:
        """``"Z4+Z2"`` / ``"0"`` shorthand used by the CLI and tests."""
        text = text.replace(" ", "")
        if text in ("", "0"):
            return cls()
        return cls.from_cyclic_orders([int(t.lstrip("Z/")) for t in text.split("+")])

    @cached_property
    def orders(self) -> tuple:
        return tuple(p**k for p, k in self.elementary_divisors)

    @cached_property
    def order(self) -> int:
        return prod(self.orders)

    @property
    def rank(self) -> int:
        return len(self.elementary_divisors)

    def primes(self):
        return sorted({p for p, _ in self.elementary_divisors})

    def partition(self, p: int) -> tuple:
        """Exponents of the p-primary factors, decreasing."""
        return tuple(sorted((k for q, k in self.elementary_divisors if q == p), reverse=True))

    def __str__(self) -> str:
        if not self.elementary_divisors:
            return "0"
        return " + ".join(f"Z/{n}" for n in self.orders)

    # elements ----------------------------------------------------------

    def zero(self) -> tuple:
        return (0,) * self.rank

    def elements(self) -> Iterator[tuple]:
        """All elements, ordered by their integer code."""
        for t in product(*(range(n) for n in reversed(self.orders))):
            yield t[::-1]

    def add(self, x, y) -> tuple:
        return tuple((a + b) % n for a, b, n in zip(x, y, self.orders))

    def scale(self, c: int, x) -> tuple:
        return tuple((c * a) % n for a, n in zip(x, self.orders))

    def element_order(self, x) -> int:
        return lcm(1, *(n // gcd(a, n) for a, n in zip(x, self.orders)))

    def reduce(self, x) -> tuple:
        return tuple(a % n for a, n in zip(x, self.orders))

    def encode(self, x) -> int:
        code, w = 0, 1
        for a, n in zip(x, self.orders):
            code += (a % n) * w
            w *= n
        return code

    def decode(self, code: int) -> tuple:
        out = []
        for n in self.orders:
            code, r = divmod(code, n)
            out.append(r)
        return tuple(out)

    @cached_property
    def tables(self) -> _Tables:
        return _tables(self.orders)

    def generated_codes(self, gens) -> frozenset:
        """Element codes of the subgroup generated by ``gens`` (closure)."""
        add = self.tables.add
        elems = {0}
        for g in gens:
            c = self.encode(g)
            if c in elems:
                continue
            frontier = list(elems)
            step = c
            while step not in elems:
                elems.update(add[x][step] for x in frontier)
                step = add[step][c]
        return frozenset(elems)


@lru_cache(maxsize=4096)
def _prime_powers(n: int) -> tuple:
    return tuple(factorint(n).items())


@dataclass(frozen=True)
class _Tables:
    add: tuple  # add[x][y] = code of x + y
    neg: tuple
    order: tuple  # element order by code


@lru_cache(maxsize=256)
def _tables(orders: tuple) -> _Tables:
    size = prod(orders)
    mods = np.array(orders, dtype=np.int64).reshape(1, -1)
    weights = np.array([prod(orders[:i]) for i in range(len(orders))], dtype=np.int64)
    codes = np.arange(size, dtype=np.int64).reshape(-1, 1)
    digits = (codes // np.maximum(weights, 1)) % mods if orders else np.zeros((size, 0), dtype=np.int64)
    summed = (digits[:, None, :] + digits[None, :, :]) % mods
    add = summed @ weights if orders else np.zeros((size, size), dtype=np.int64)
    neg = ((-digits) % mods) @ weights if orders else np.zeros(size, dtype=np.int64)
    order = np.ones(size, dtype=np.int64)
    for i, n in enumerate(orders):
        order = np.lcm(order, n // np.gcd(digits[:, i], n))
    return _Tables(
        tuple(map(tuple, add.tolist())),
        tuple(neg.tolist()),
        tuple(order.tolist()),
    )


@dataclass(frozen=True)
class Subgroup:
    group: FiniteAbelianGroup
    generators: tuple
    codes: frozenset

    @property
    def order(self) -> int:
        return len(self.codes)

    @property
    def is_trivial(self) -> bool:
        return len(self.codes) == 1

    def elements(self):
        return sorted(self.group.decode(c) for c in self.codes)

    def __contains__(self, x) -> bool:
        return self.group.encode(x) in self.codes


# --------------------------------------------------------------------------
# enumeration of groups


def partitions(n: int, largest: int = None) -> Iterator[tuple]:
    """Partitions of n as non-increasing tuples."""
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def groups_of_order(n: int) -> list:
    """Every abelian group of order n up to isomorphism, deterministic order."""
    per_prime = [
        [[(p, k) for k in lam] for lam in partitions(e)] for p, e in sorted(factorint(n).items())
    ]
    return [FiniteAbelianGroup(tuple(d for part in choice for d in part)) for choice in product(*per_prime)]


def groups_up_to_order(n: int) -> list:
    return [g for m in range(1, n + 1) for g in groups_of_order(m)]


def p_groups_up_to(p: int, max_exp: int) -> list:
    require_prime(p)
    return [FiniteAbelianGroup(tuple((p, k) for k in lam)) for e in range(max_exp + 1) for lam in partitions(e)]


# --------------------------------------------------------------------------
# quotients


def quotient(g: FiniteAbelianGroup, h_gens) -> FiniteAbelianGroup:
    """Isomorphism type of g / <h_gens>, via SNF of the stacked presentation."""
    n = g.rank
    rows = [[g.orders[i] if j == i else 0 for j in range(n)] for i in range(n)]
    rows += [list(g.reduce(h)) for h in h_gens]
    if n == 0:
        return FiniteAbelianGroup()
    return FiniteAbelianGroup.from_cyclic_orders([d for d in invariant_factors(rows, n) if d != 1])


# --------------------------------------------------------------------------
# subgroups
#
# Subgroups of X + Z/n are parametrized (Goursat) by a subgroup A1 of X,
# divisors t | s | n and, when s > t, an element x0 of X/A1 of order
# exactly s/t:  A = A1 + <(0, n/t)> + <(x0, n/s)>.  Every subgroup arises
# exactly once, so no deduplication is needed.


def _subgroups_codes(orders: tuple):
    """List of (generators-as-codes, element-codes) for sum of Z/orders[i]."""
    if not orders:
        return [((), frozenset({0}))]
    return list(_extend(orders[:-1], orders[-1], _subgroups_codes(orders[:-1])))


def _extend(x_orders: tuple, n: int, subs_x):
    size_x = prod(x_orders)
    tabs = _tables(x_orders)
    add, order = tabs.add, tabs.order
    divs = [d for d in divisors(n)]
    for gens1, a1 in subs_x:
        # coset representatives of X/A1 and their orders modulo A1
        rep_of = [-1] * size_x
        reps = []
        for x in range(size_x):
            if rep_of[x] < 0:
                reps.append(x)
                for a in a1:
                    rep_of[add[x][a]] = x
        rel_order = {}
        for x in reps:
            k, y = 1, x
            while y not in a1:
                y = add[y][x]
                k += 1
            rel_order[x] = k
        a1_sorted = sorted(a1)
        for s in divs:
            for t in divisors(s):
                yt = (n // t) % n
                base = [c for c in gens1] + ([yt * size_x] if t > 1 else [])
                y_t_vals = [(yt * i) % n for i in range(t)]
                if s == t:
                    codes = frozenset(a + size_x * y for a in a1_sorted for y in y_t_vals)
                    yield tuple(base), codes
                    continue
                q = s // t
                y0 = n // s
                for x0 in reps:
                    if rel_order[x0] != q:
                        continue
                    multiples = [0]
                    for _ in range(q - 1):
                        multiples.append(add[multiples[-1]][x0])
                    codes = frozenset(
                        add[a][multiples[k]] + size_x * ((k * y0 + y) % n)
                        for a in a1_sorted
                        for k in range(q)
                        for y in y_t_vals
                    )
                    yield tuple(base + [x0 + size_x * y0]), codes


def iter_subgroups(g: FiniteAbelianGroup, budget: int = DEFAULT_BUDGET) -> Iterator[Subgroup]:
    """Stream every subgroup of g exactly once, deterministic order."""
    check_budget(g.order, budget)
    orders = g.orders
    if not orders:
        yield Subgroup(g, (), frozenset({0}))
        return
    for gens, codes in _extend(orders[:-1], orders[-1], _subgroups_codes(orders[:-1])):
        yield Subgroup(g, tuple(g.decode(c) for c in gens), codes)


def enumerate_subgroups(g: FiniteAbelianGroup, budget: int = DEFAULT_BUDGET) -> list:
    return list(iter_subgroups(g, budget))


def enumerate_subgroups_by_closure(g: FiniteAbelianGroup, budget: int = DEFAULT_BUDGET) -> list:
    """Independent slow path: close under joins with cyclic subgroups."""
    check_budget(g.order, budget)
    add = g.tables.add
    cyclic = {}
    for c in range(g.order):
        cyclic.setdefault(g.generated_codes([g.decode(c)]), c)
    seen = {frozenset({0}): ()}
    frontier = [frozenset({0})]
    while frontier:
        nxt = []
        for s in frontier:
            for cyc, c in cyclic.items():
                if cyc <= s:
                    continue
                joined = frozenset(add[a][b] for a in s for b in cyc)
                if joined not in seen:
                    seen[joined] = seen[s] + (c,)
                    nxt.append(joined)
        frontier = nxt
    return [
        Subgroup(g, tuple(g.decode(c) for c in gens), codes)
        for codes, gens in sorted(seen.items(), key=lambda kv: (len(kv[0]), sorted(kv[0])))
    ]
