"""Exact generating series of stable cohomology for cone-indexed compactification families."""

from .cones import (
    ConeAnalysis,
    ConeSpec,
    analyze,
    cone_automorphisms,
    cone_components,
    cone_dimension,
    cone_poincare_series,
    cone_rank,
    cyclic_cone,
    direct_sum,
    load_cone,
)
from .errors import (
    AgstabError,
    CapExceeded,
    DegreeMismatch,
    FixtureMismatch,
    InconsistentAction,
    InputError,
    NonIntegralCoefficient,
    NonzeroConstant,
    PartitionMismatch,
    SearchBudgetExceeded,
    VerificationFailed,
    ZeroConstantTerm,
)
from .molien import LinearAction, molien_series, molien_series_naive
from .perms import (
    PermGroup,
    Permutation,
    cycle_type,
    cycle_type_count,
    direct_product,
    group_from_generators,
    wreath_product,
)
from .pipeline import (
    BettiReport,
    ConeClassRecord,
    Dataset,
    betti_series,
    display_report,
    display_series,
    generator_series,
    lambda_series,
    load_dataset,
    perfect_generator_counts,
    validate_smallness,
)
from .reference import SUITE_NAMES, run_suite
from .series import (
    DEFAULT_ORDER,
    RationalMatrix,
    TruncatedSeries,
    det_one_minus_tA,
    expand_rational_form,
    product_form,
)
from .symfunc import exp_series, exp_series_via_h, h_in_power_sums, partitions, plethysm_h

__version__ = "0.1.0"

__all__ = [
    "AgstabError",
    "BettiReport",
    "CapExceeded",
    "ConeAnalysis",
    "ConeClassRecord",
    "ConeSpec",
    "Dataset",
    "DEFAULT_ORDER",
    "DegreeMismatch",
    "FixtureMismatch",
    "InconsistentAction",
    "InputError",
    "LinearAction",
    "NonIntegralCoefficient",
    "NonzeroConstant",
    "PartitionMismatch",
    "PermGroup",
    "Permutation",
    "RationalMatrix",
    "SearchBudgetExceeded",
    "SUITE_NAMES",
    "TruncatedSeries",
    "VerificationFailed",
    "ZeroConstantTerm",
    "analyze",
    "betti_series",
    "cone_automorphisms",
    "cone_components",
    "cone_dimension",
    "cone_poincare_series",
    "cone_rank",
    "cycle_type",
    "cycle_type_count",
    "cyclic_cone",
    "det_one_minus_tA",
    "direct_product",
    "direct_sum",
    "display_report",
    "display_series",
    "exp_series",
    "exp_series_via_h",
    "expand_rational_form",
    "generator_series",
    "group_from_generators",
    "h_in_power_sums",
    "lambda_series",
    "load_cone",
    "load_dataset",
    "molien_series",
    "molien_series_naive",
    "partitions",
    "perfect_generator_counts",
    "plethysm_h",
    "product_form",
    "run_suite",
    "validate_smallness",
    "wreath_product",
]
