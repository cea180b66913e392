"""Exact regularity analysis of the discrete noncentered maximal function.

The library computes the discrete noncentered Hardy-Littlewood maximal
function of finitely supported rational-valued functions in exact arithmetic,
decomposes second differences into convex/concave chains, evaluates the
infinite l1 sums of second differences in closed form, and verifies the two
headline facts (see :mod:`maxreg.regularity`) on arbitrary finite sets,
together with a search harness probing how far they extend.
"""

from ._version import __version__
from .lattice import (
    IndexSet,
    LatticeFunction,
    block_count,
    central_second_difference,
    forward_difference,
    lp_norm,
)
from .maximal import (
    MaximalProfile,
    average,
    maximal_at,
    maximal_profile,
    maximal_profile_fast,
)
from .regularity import (
    MINUS,
    PLUS,
    AnalyzedFunction,
    Chain,
    DecompositionReport,
    RatioRecord,
    boundaries,
    chain_sum_check,
    chains,
    classify,
    decompose,
    first_derivative_norms,
    funeq_rhs,
    lemma1_violations,
    second_norm,
    theorem1_report,
)
from .reporting import (
    Report,
    SetLiteralError,
    build_report,
    canonical_set_literal,
    parse_set_literal,
)
from .search import (
    GENERATOR_ID,
    GeneralRatioRecord,
    SearchSummary,
    TruncatedScan,
    Violation,
    exhaustive,
    higher_derivative_scan,
    random_functions,
    random_sets,
)

__all__ = [
    "__version__",
    "IndexSet",
    "LatticeFunction",
    "block_count",
    "central_second_difference",
    "forward_difference",
    "lp_norm",
    "MaximalProfile",
    "average",
    "maximal_at",
    "maximal_profile",
    "maximal_profile_fast",
    "PLUS",
    "MINUS",
    "AnalyzedFunction",
    "Chain",
    "DecompositionReport",
    "RatioRecord",
    "classify",
    "boundaries",
    "chains",
    "chain_sum_check",
    "second_norm",
    "funeq_rhs",
    "decompose",
    "lemma1_violations",
    "theorem1_report",
    "first_derivative_norms",
    "Report",
    "SetLiteralError",
    "build_report",
    "canonical_set_literal",
    "parse_set_literal",
    "GENERATOR_ID",
    "GeneralRatioRecord",
    "SearchSummary",
    "TruncatedScan",
    "Violation",
    "exhaustive",
    "higher_derivative_scan",
    "random_functions",
    "random_sets",
]
