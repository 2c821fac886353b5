"""Classification of symbolic abelian groups by Bassian-type properties."""

from .classifier import (
    Answer,
    Citation,
    ClassificationReport,
    PreconditionError,
    Verdict,
    explain,
    extract_elementary_plus_bassian,
    is_bassian,
    is_generalized_bassian,
    is_hereditarily_bassian,
    is_hereditarily_hopfian,
    is_nearly_bassian,
    is_nearly_generalized_bassian,
    is_super_bassian,
)
from .dsl import ParseError, parse_group_expr, render
from .invariants import InvariantProfile, invariant_profile, property_p
from .model import (
    Cardinal,
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
    finite,
    normalize,
)

__version__ = "0.1.0"
