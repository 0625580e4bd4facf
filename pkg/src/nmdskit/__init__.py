"""Near-MDS codes from four explicit generator families over finite fields,
their exact weight distributions, subset-sum counting, and the 2- and
3-designs supported by their minimum-weight codewords."""

from .code import (
    AMDS,
    MDS,
    NMDS,
    OTHER,
    CodeClass,
    LinearCode,
    WeightDistribution,
    classify,
    dual_code,
    macwilliams_dual_distribution,
    min_distance,
    nmds_distribution,
    weight_distribution_exhaustive,
)
from .constructions import (
    FAMILIES,
    build_code,
    build_generator,
    construction_report,
    predicted_min_weight_count,
    valid_k_range,
)
from .designs import Design, make_design, predicted_lambda, verify_t_design
from .errors import BudgetExceededError, FieldError, NmdskitError
from .gf import FieldSpec, field_from_json, make_field
from .linalg import Matrix, matrix_from_rows
from .subsetsum import (
    FULL,
    UNITS,
    binary_closed_form,
    binary_recurrence_count,
    liwan_count,
    oracle_count,
)

__version__ = "0.1.0"

__all__ = [
    "AMDS", "MDS", "NMDS", "OTHER", "FAMILIES", "FULL", "UNITS",
    "BudgetExceededError", "CodeClass", "Design", "FieldError", "FieldSpec",
    "LinearCode", "Matrix", "NmdskitError", "WeightDistribution",
    "binary_closed_form", "binary_recurrence_count", "build_code",
    "build_generator", "classify", "construction_report", "dual_code",
    "field_from_json", "liwan_count", "macwilliams_dual_distribution",
    "make_design", "make_field", "matrix_from_rows", "min_distance",
    "nmds_distribution", "oracle_count", "predicted_lambda",
    "predicted_min_weight_count", "valid_k_range", "verify_t_design",
    "weight_distribution_exhaustive",
]
