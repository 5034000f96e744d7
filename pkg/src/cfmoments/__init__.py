"""Exact constructions around equivalent continued-fraction expansions:
moment sequences, generalized-moment triangles, production matrices, and
the machinery to verify the worked examples end to end."""

from .ring import (
    ExactDivisionError,
    QPoly,
    QRat,
    ScalarParseError,
    add,
    eval_q,
    exact_div,
    field_div,
    is_scalar,
    mul,
    parse_scalar,
    q,
    render,
    sub,
)
from .triangle import (
    ProductionMatrix,
    Triangle,
    behead,
    generate,
    hadamard,
    hankel_det,
    hankel_transform,
    invert,
    production_of,
    rescale_columns,
)
from .triangle import mul as matrix_mul
from .series import (
    RiordanPair,
    TruncatedSeries,
    catalan_series,
    interleave_columns,
    riordan_inverse,
    riordan_matrix,
    riordan_mul,
    schroder_column,
    series_compose,
    series_from_rational,
    series_mul,
    series_reciprocal,
    series_revert,
)
from .cfrac import (
    InsufficientCoefficients,
    JFractionCoeffs,
    QDBreakdownError,
    SFractionCoeffs,
    hankel_from_sfraction,
    moments_from_jfraction,
    moments_from_sfraction,
    qd_sfraction_from_moments,
    s_to_j,
    two_power_chain_coeff,
)
from .pipeline import (
    EXAMPLE_NAMES,
    CatalanLikenessError,
    CheckResult,
    ComparisonResult,
    VerifyReport,
    build_M,
    build_N_via_behead,
    build_N_via_rescale,
    compare,
    op_coeff_triangle,
    q_binomial,
    qcase_factorization_check,
    schroder_structure_checks,
    verify_example,
)

__version__ = "0.1.0"

__all__ = [
    "ExactDivisionError",
    "QPoly",
    "QRat",
    "ScalarParseError",
    "add",
    "eval_q",
    "exact_div",
    "field_div",
    "is_scalar",
    "mul",
    "parse_scalar",
    "q",
    "render",
    "sub",
    "ProductionMatrix",
    "Triangle",
    "behead",
    "generate",
    "hadamard",
    "hankel_det",
    "hankel_transform",
    "invert",
    "matrix_mul",
    "production_of",
    "rescale_columns",
    "RiordanPair",
    "TruncatedSeries",
    "catalan_series",
    "interleave_columns",
    "riordan_inverse",
    "riordan_matrix",
    "riordan_mul",
    "schroder_column",
    "series_compose",
    "series_from_rational",
    "series_mul",
    "series_reciprocal",
    "series_revert",
    "InsufficientCoefficients",
    "JFractionCoeffs",
    "QDBreakdownError",
    "SFractionCoeffs",
    "hankel_from_sfraction",
    "moments_from_jfraction",
    "moments_from_sfraction",
    "qd_sfraction_from_moments",
    "s_to_j",
    "two_power_chain_coeff",
    "EXAMPLE_NAMES",
    "CatalanLikenessError",
    "CheckResult",
    "ComparisonResult",
    "VerifyReport",
    "build_M",
    "build_N_via_behead",
    "build_N_via_rescale",
    "compare",
    "op_coeff_triangle",
    "q_binomial",
    "qcase_factorization_check",
    "schroder_structure_checks",
    "verify_example",
]
