"""Pseudo fuzzy sets: bipolar membership pairs and triangular numbers.

Every element carries a positive grade mu in [0, 1] and a negative grade
lam in [-1, 0]. The package provides the pair algebra (validation,
magnitude cases), pseudo triangular fuzzy numbers in dependent
(lam = mu - 1) and independent (lam = -mu) kinds, level-cut arithmetic
with a brute-force extension-principle oracle, and a CSV/JSON CLI.
"""

from .arith import (
    DEFAULT_LEVELS,
    DEFAULT_ORACLE_GRID,
    BinaryOpCode,
    CutTable,
    add,
    cut_table,
    div,
    extension_oracle,
    lambda_of_result,
    mul,
    scale,
    sub,
)
from .core import (
    DEFAULT_EPS,
    CaseLabel,
    DiscretePseudoFuzzySet,
    MembershipPair,
    PseudoFuzzyElement,
    classify_case,
    is_dependent_pair,
    magnitude_sum,
    validate_pair,
    validate_set,
)
from .errors import (
    AlphaOutOfRange,
    BadCount,
    BadRange,
    BadTolerance,
    BetaOutOfRange,
    DivisorStraddlesZero,
    DocumentError,
    DuplicateSupportPoint,
    InvalidCutTable,
    InvalidInterval,
    InvalidShape,
    KindMismatch,
    LambdaOutOfRange,
    MuOutOfRange,
    NonFinite,
    ParamOutOfRange,
    PseudoFuzzyError,
    UnsortedSupport,
    ZeroScale,
)
from .ptfn import (
    Interval,
    Kind,
    PseudoTfn,
    TriangleShape,
    alpha_cut_mu,
    beta_cut_lambda,
    discretize,
    kind_violation,
    lambda_at,
    mu_at,
    pair_at,
    parametric_point,
    set_kind_violation,
    verify_kind,
)

__version__ = "0.1.0"

__all__ = [
    "AlphaOutOfRange",
    "BadCount",
    "BadRange",
    "BadTolerance",
    "BetaOutOfRange",
    "BinaryOpCode",
    "CaseLabel",
    "CutTable",
    "DEFAULT_EPS",
    "DEFAULT_LEVELS",
    "DEFAULT_ORACLE_GRID",
    "DiscretePseudoFuzzySet",
    "DivisorStraddlesZero",
    "DocumentError",
    "DuplicateSupportPoint",
    "Interval",
    "InvalidCutTable",
    "InvalidInterval",
    "InvalidShape",
    "Kind",
    "KindMismatch",
    "LambdaOutOfRange",
    "MembershipPair",
    "MuOutOfRange",
    "NonFinite",
    "ParamOutOfRange",
    "PseudoFuzzyElement",
    "PseudoFuzzyError",
    "PseudoTfn",
    "TriangleShape",
    "UnsortedSupport",
    "ZeroScale",
    "add",
    "alpha_cut_mu",
    "beta_cut_lambda",
    "classify_case",
    "cut_table",
    "discretize",
    "div",
    "extension_oracle",
    "is_dependent_pair",
    "kind_violation",
    "lambda_at",
    "lambda_of_result",
    "magnitude_sum",
    "mu_at",
    "mul",
    "pair_at",
    "parametric_point",
    "scale",
    "set_kind_violation",
    "sub",
    "validate_pair",
    "validate_set",
    "verify_kind",
]
