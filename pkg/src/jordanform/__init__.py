"""Exact Jordan decompositions over the Gaussian rationals.

A = V * J * V^-1 computed with arbitrary-precision rational arithmetic:
triangularization, generalized-eigenspace block diagonalization, blockwise
triangularization, and the canonical Jordan form, plus structural checks
and a round-trip test-case generator.
"""

from .decomp import (
    Block,
    Decomposition,
    JordanChain,
    StageLadder,
    block_diagonalize,
    blockwise_trigonalize,
    is_jordan_matrix,
    jordan_chains,
    jordan_decomposition,
    jordan_matrix,
    stage_ladder,
    trigonalize,
)
from .errors import (
    DependentInput,
    DimensionMismatch,
    IncompleteSpectrum,
    InternalInvariantViolation,
    InvalidProvidedEigenvalue,
    InvalidStructure,
    JordanFormError,
    NotAnEigenvalue,
    ParseError,
    SingularMatrix,
    SpectrumNotRepresentable,
    ZeroDenominator,
    ZeroVector,
)
from .matrices import (
    Basis,
    ExactMatrix,
    colspace_basis,
    complete_basis,
    inverse,
    krylov_annihilator,
    nullspace_basis,
    rank,
    rref,
    shift_by,
    solve,
)
from .polynomials import Polynomial, format_polynomial, poly_gcd, poly_lcm
from .scalars import (
    GaussianRational,
    format_scalar,
    gaussian_sqrt,
    parse_scalar,
    rational_sqrt,
)
from .spectral import (
    Spectrum,
    SpectrumEntry,
    find_eigenvalue,
    minimal_polynomial,
    poly_apply,
    poly_roots_exact,
    spectrum,
)
from .verify import (
    CheckReport,
    CheckResult,
    JordanStructure,
    check_decomposition,
    elementary_conjugator,
    exhaustive_structures,
    generate_case,
    parse_structure,
)

__version__ = "0.1.0"

__all__ = [
    "Basis",
    "Block",
    "CheckReport",
    "CheckResult",
    "Decomposition",
    "DependentInput",
    "DimensionMismatch",
    "ExactMatrix",
    "GaussianRational",
    "IncompleteSpectrum",
    "InternalInvariantViolation",
    "InvalidProvidedEigenvalue",
    "InvalidStructure",
    "JordanChain",
    "JordanFormError",
    "JordanStructure",
    "NotAnEigenvalue",
    "ParseError",
    "Polynomial",
    "SingularMatrix",
    "Spectrum",
    "SpectrumEntry",
    "SpectrumNotRepresentable",
    "StageLadder",
    "ZeroDenominator",
    "ZeroVector",
    "block_diagonalize",
    "blockwise_trigonalize",
    "check_decomposition",
    "colspace_basis",
    "complete_basis",
    "elementary_conjugator",
    "exhaustive_structures",
    "find_eigenvalue",
    "format_polynomial",
    "format_scalar",
    "gaussian_sqrt",
    "generate_case",
    "inverse",
    "is_jordan_matrix",
    "jordan_chains",
    "jordan_decomposition",
    "jordan_matrix",
    "krylov_annihilator",
    "minimal_polynomial",
    "nullspace_basis",
    "parse_scalar",
    "parse_structure",
    "poly_apply",
    "poly_gcd",
    "poly_lcm",
    "poly_roots_exact",
    "rank",
    "rational_sqrt",
    "rref",
    "shift_by",
    "solve",
    "spectrum",
    "stage_ladder",
    "trigonalize",
]
