"""Exact finite-dimensional nonunitary representations of the Poincare algebra.

Builds angular-momentum, boost, vector, and momentum matrices for two-block
spin representations (A,B)+(C,D) in exact radical arithmetic, with three
independent construction routes and a zero-tolerance verifier for all 45
commutation rules.
"""

from .radical import RadicalScalar, normalize_radical, sqrt_of_rational, ZERO, ONE, I_UNIT
from .spins import HalfInt, Spin, SpinPair, flatten_index
from .matrix import Matrix, commutator, anticommutator, kron, block_diag
from .generators import (
    GeneratorSet,
    direct_sum,
    generators_for,
    irrep_generators,
    ladder_coeff_r,
    ladder_coeff_s,
    rotation_rep,
    spin,
)
from .vectors import (
    CaseTag,
    FreeParams,
    NoSolutionError,
    SELECTION_RULE,
    TUCoefficients,
    VectorSet,
    classify_case,
    closed_form_vectors,
    recursion_solve,
    vectors_from_coefficients,
)
from .cg import (
    CGKey,
    LambdaParams,
    RatioFit,
    RatioMismatch,
    cg_block_12,
    cg_block_21,
    cg_vector_matrices,
    clebsch_gordan,
    equivalence_ratio,
)
from .momentum import BlockChoice, momentum_from_vectors, noncommutativity_witness, translation_combination
from .verify import (
    CliffordReport,
    RuleReport,
    check_clifford,
    check_lorentz,
    check_poincare,
    check_translations,
    check_vector_rules,
    finite_covariance_check,
    matrix_exp,
)

__all__ = [
    "RadicalScalar", "normalize_radical", "sqrt_of_rational", "ZERO", "ONE", "I_UNIT",
    "HalfInt", "Spin", "SpinPair", "flatten_index",
    "Matrix", "commutator", "anticommutator", "kron", "block_diag",
    "GeneratorSet", "direct_sum", "generators_for", "irrep_generators",
    "ladder_coeff_r", "ladder_coeff_s", "rotation_rep", "spin",
    "CaseTag", "FreeParams", "NoSolutionError", "SELECTION_RULE",
    "TUCoefficients", "VectorSet", "classify_case", "closed_form_vectors",
    "recursion_solve", "vectors_from_coefficients",
    "CGKey", "LambdaParams", "RatioFit", "RatioMismatch",
    "cg_block_12", "cg_block_21", "cg_vector_matrices", "clebsch_gordan",
    "equivalence_ratio",
    "BlockChoice", "momentum_from_vectors", "noncommutativity_witness",
    "translation_combination",
    "CliffordReport", "RuleReport", "check_clifford", "check_lorentz",
    "check_poincare", "check_translations", "check_vector_rules",
    "finite_covariance_check", "matrix_exp",
]

__version__ = "0.1.0"
