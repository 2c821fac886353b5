"""Exhaustive and sampled verification jobs over finite abelian groups."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from itertools import product

from .finite import (
    DEFAULT_BUDGET,
    FiniteAbelianGroup,
    Subgroup,
    check_budget,
    groups_up_to_order,
    iter_subgroups,
    p_groups_up_to,
    quotient,
)
from .homs import count_homs, embedding_criterion, enumerate_homs, enumeration_size, exists_injection

DEFAULT_SEED = 7
FULL_WALK_LIMIT = 1 << 12  # walk enumerate_homs element by element up to this size


@dataclass
class SweepReport:
    job: str
    checked: int = 0
    subchecks: int = 0
    counterexamples: list = field(default_factory=list)
    seconds: float = 0.0
    notes: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> dict:
        return {
            "job": self.job,
            "checked": self.checked,
            "subchecks": self.subchecks,
            "counterexamples": [str(c) for c in self.counterexamples],
            "seconds": round(self.seconds, 3),
            **self.notes,
        }


# --------------------------------------------------------------------------
# the Bassian definition on finite groups


def injection_admitting_subgroups(g: FiniteAbelianGroup, budget: int = DEFAULT_BUDGET):
    """Subgroups H such that g embeds in g/H, with the count of subgroups tried."""
    found, total = [], 0
    for h in iter_subgroups(g, budget):
        total += 1
        q = quotient(g, h.generators)
        if q.order * h.order != g.order:
            raise AssertionError(f"|G/H||H| != |G| for G={g}, H={h.generators}")
        if exists_injection(g, q, budget):
            found.append(h)
    return found, total


def oracle_bassian_check(g: FiniteAbelianGroup, budget: int = DEFAULT_BUDGET) -> bool:
    """Literal Bassian definition: g -> g/H injective forces H = 0."""
    found, _ = injection_admitting_subgroups(g, budget)
    return all(h.is_trivial for h in found)


def is_direct_summand(h: Subgroup, budget: int = DEFAULT_BUDGET) -> bool:
    g = h.group
    if h.is_trivial or h.order == g.order:
        return True
    for k in iter_subgroups(g, budget):
        if k.order * h.order == g.order and len(k.codes & h.codes) == 1:
            return True
    return False


def oracle_generalized_bassian_check(g: FiniteAbelianGroup, budget: int = DEFAULT_BUDGET) -> bool:
    """Literal generalized Bassian definition: such an H must be a summand."""
    found, _ = injection_admitting_subgroups(g, budget)
    return all(is_direct_summand(h, budget) for h in found)


def bassian_sweep(max_order: int, budget: int = DEFAULT_BUDGET) -> SweepReport:
    check_budget(max_order, budget)
    rep = SweepReport("bassian-sweep")
    start = time.perf_counter()
    for g in groups_up_to_order(max_order):
        found, total = injection_admitting_subgroups(g, budget)
        rep.checked += 1
        rep.subchecks += total
        trivial = [h for h in found if h.is_trivial]
        if len(trivial) != 1 or len(found) != 1:
            rep.counterexamples.append((str(g), [h.generators for h in found]))
    rep.seconds = time.perf_counter() - start
    rep.notes["maxOrder"] = max_order
    return rep


# --------------------------------------------------------------------------
# homomorphism counting and embeddings


def hom_count_sweep(max_order: int, budget: int = DEFAULT_BUDGET, walk_limit: int = FULL_WALK_LIMIT) -> SweepReport:
    """Compare the gcd formula with the enumeration for all pairs of order <= max_order.

    Enumerations up to ``walk_limit`` maps are walked map by map; larger ones
    are sized from their brute-force candidate lists.
    """
    check_budget(max_order, budget)
    rep = SweepReport("hom-count")
    start = time.perf_counter()
    groups = groups_up_to_order(max_order)
    walked = 0
    for a, b in product(groups, groups):
        rep.checked += 1
        formula = count_homs(a, b)
        size = enumeration_size(a, b)
        if size <= walk_limit:
            maps = list(enumerate_homs(a, b))
            if len(set(maps)) != len(maps):
                rep.counterexamples.append((str(a), str(b), "duplicate maps"))
            size = len(maps)
            walked += 1
        if size != formula:
            rep.counterexamples.append((str(a), str(b), formula, size))
    rep.subchecks = walked
    rep.seconds = time.perf_counter() - start
    rep.notes["maxOrder"] = max_order
    return rep


def embedding_equivalence_sweep(p: int, max_exp: int, budget: int = None) -> SweepReport:
    """existsInjection vs embeddingCriterion over all p-group pairs of order <= p^max_exp."""
    budget = p**max_exp if budget is None else budget
    check_budget(p**max_exp, budget)
    rep = SweepReport("embedding-equiv")
    start = time.perf_counter()
    groups = p_groups_up_to(p, max_exp)
    for a, b in product(groups, groups):
        rep.checked += 1
        brute = exists_injection(a, b, budget)
        if brute:
            rep.subchecks += 1
        if brute != embedding_criterion(a, b):
            rep.counterexamples.append((str(a), str(b), brute))
    rep.seconds = time.perf_counter() - start
    rep.notes.update({"p": p, "maxExp": max_exp, "embeddings": rep.subchecks})
    return rep


# --------------------------------------------------------------------------
# A <= B + C, B elementary, A meet pC = 0  =>  A elementary


def _split(p: int, b_elem: FiniteAbelianGroup, c: FiniteAbelianGroup):
    if any(q != p or k != 1 for q, k in b_elem.elementary_divisors):
        raise ValueError(f"B = {b_elem} is not an elementary {p}-group")
    if any(q != p for q, _ in c.elementary_divisors):
        raise ValueError(f"C = {c} is not a {p}-group")
    g = FiniteAbelianGroup(b_elem.elementary_divisors + c.elementary_divisors)
    # place B's factors onto the first Z/p slots of the sorted group
    nb = b_elem.rank
    c_slots = list(range(nb, g.rank))
    p_c = set()
    for x in c.elements():
        # C's factors are sorted too, so they line up with the trailing slots
        v = [0] * g.rank
        for slot, a in zip(c_slots, x):
            v[slot] = a
        p_c.add(g.encode(g.scale(p, v)))
    return g, frozenset(p_c)


def _lemma_violation(g: FiniteAbelianGroup, p: int, a_codes, p_c) -> bool:
    if len(a_codes & p_c) != 1:
        return False  # hypothesis fails, nothing to check
    order = g.tables.order
    return any(order[x] > p for x in a_codes)


def lemma_basic_check(
    p: int,
    b_elem: FiniteAbelianGroup,
    c: FiniteAbelianGroup,
    trials: int = 0,
    seed: int = DEFAULT_SEED,
    budget: int = DEFAULT_BUDGET,
) -> bool:
    """No subgroup A of B + C with A meet pC = 0 has an element of order > p.

    ``trials == 0`` sweeps every subgroup; otherwise ``trials`` subgroups
    generated by random elements are sampled with ``seed``.
    """
    return not lemma_basic_counterexamples(p, b_elem, c, trials, seed, budget)


def lemma_basic_counterexamples(p, b_elem, c, trials=0, seed=DEFAULT_SEED, budget=DEFAULT_BUDGET) -> list:
    g, p_c = _split(p, b_elem, c)
    check_budget(g.order, budget)
    bad = []
    if trials == 0:
        for a in iter_subgroups(g, budget):
            if _lemma_violation(g, p, a.codes, p_c):
                bad.append(a.generators)
        return bad
    rng = random.Random(seed)
    for _ in range(trials):
        gens = [g.decode(rng.randrange(g.order)) for _ in range(rng.randint(1, 3))]
        if _lemma_violation(g, p, g.generated_codes(gens), p_c):
            bad.append(tuple(gens))
    return bad


def lemma_basic_pairs(p: int, max_order: int):
    """All (B, C): B elementary, C a p-group, |B + C| <= max_order."""
    e = 0
    while p ** (e + 1) <= max_order:
        e += 1
    for c in p_groups_up_to(p, e):
        c_exp = sum(k for _, k in c.elementary_divisors)
        for nb in range(e - c_exp + 1):
            yield FiniteAbelianGroup(((p, 1),) * nb), c


def lemma_basic_sweep(p: int, max_order: int, budget: int = DEFAULT_BUDGET) -> SweepReport:
    """Exhaustive over every (B, C) pair and every subgroup of B + C.

    Pairs with the same ambient group and the same pC share one subgroup walk.
    """
    check_budget(max_order, budget)
    rep = SweepReport("lemma-basic")
    start = time.perf_counter()
    shared: dict = {}
    for b_elem, c in lemma_basic_pairs(p, max_order):
        g, p_c = _split(p, b_elem, c)
        shared.setdefault((g, p_c), []).append((b_elem, c))
    for (g, p_c), pairs in shared.items():
        total = 0
        for a in iter_subgroups(g, budget):
            total += 1
            if _lemma_violation(g, p, a.codes, p_c):
                rep.counterexamples.append((str(g), a.generators))
        rep.checked += len(pairs)
        rep.subchecks += total * len(pairs)
    rep.seconds = time.perf_counter() - start
    rep.notes.update({"p": p, "maxOrder": max_order, "ambientGroups": len(shared)})
    return rep


def lemma_basic_sample(p: int, trials: int, seed: int = DEFAULT_SEED, max_order: int = 256) -> SweepReport:
    """Random (B, C) pairs and random subgroups A, seed-deterministic."""
    rep = SweepReport("lemma-basic")
    start = time.perf_counter()
    pairs = list(lemma_basic_pairs(p, max_order))
    rng = random.Random(seed)
    for _ in range(trials):
        b_elem, c = pairs[rng.randrange(len(pairs))]
        g, p_c = _split(p, b_elem, c)
        gens = [g.decode(rng.randrange(g.order)) for _ in range(rng.randint(1, 3))]
        rep.checked += 1
        if _lemma_violation(g, p, g.generated_codes(gens), p_c):
            rep.counterexamples.append((str(b_elem), str(c), gens))
    rep.seconds = time.perf_counter() - start
    rep.notes.update({"p": p, "trials": trials, "seed": seed})
    return rep
