"""Exact classification of cross-ratio degrees of 4-uniform hypergraphs."""

from .classify import (
    ClassRecord,
    NonConsensusError,
    Report,
    RunConfig,
    run_classification,
    verify_against_golden,
)
from .enumeration import enumerate_classes
from .hypergraph import (
    CanonicalKey,
    Hypergraph,
    canonical_form,
    canonicalize,
    column_sums,
    format_matrix,
    is_isomorphic,
    parse_matrix,
)
from .polya import count_no_isolated, counting_polynomial, induced_cycle_type
from .reduce import (
    ReductionKind,
    ReductionOutcome,
    column_sum_bound,
    matching_count,
    repeated_degree_one_zero,
    strip_degree_one,
)
from .solver import (
    INFINITY,
    CrossRatioSystem,
    DegreeResult,
    ParameterDraw,
    TriangularChain,
    count_preimages,
    cross_ratio,
    cross_ratio_degree,
    gauge_and_build,
    triangularize,
)

__version__ = "0.1.0"

__all__ = [
    "CanonicalKey",
    "ClassRecord",
    "CrossRatioSystem",
    "DegreeResult",
    "Hypergraph",
    "INFINITY",
    "NonConsensusError",
    "ParameterDraw",
    "Report",
    "ReductionKind",
    "ReductionOutcome",
    "RunConfig",
    "TriangularChain",
    "canonical_form",
    "canonicalize",
    "column_sum_bound",
    "column_sums",
    "count_no_isolated",
    "count_preimages",
    "counting_polynomial",
    "cross_ratio",
    "cross_ratio_degree",
    "enumerate_classes",
    "format_matrix",
    "gauge_and_build",
    "induced_cycle_type",
    "is_isomorphic",
    "matching_count",
    "parse_matrix",
    "repeated_degree_one_zero",
    "run_classification",
    "strip_degree_one",
    "triangularize",
    "verify_against_golden",
]
