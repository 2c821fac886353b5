"""Brute-force machinery over finite abelian groups."""

from .checks import (
    DEFAULT_SEED,
    SweepReport,
    bassian_sweep,
    embedding_equivalence_sweep,
    hom_count_sweep,
    lemma_basic_check,
    lemma_basic_sample,
    lemma_basic_sweep,
    oracle_bassian_check,
    oracle_generalized_bassian_check,
)
from .finite import (
    DEFAULT_BUDGET,
    BudgetExceededError,
    FiniteAbelianGroup,
    Subgroup,
    enumerate_subgroups,
    groups_of_order,
    iter_subgroups,
    quotient,
)
from .homs import count_homs, embedding_criterion, enumerate_homs, exists_injection
from .snf import IntegerMatrix, SnfResult, smith_normal_form
