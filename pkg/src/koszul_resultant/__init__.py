"""Exact resultants of homogeneous polynomial systems via Koszul complexes."""

from .complexes import (
    ChainComplex,
    CohomologyReport,
    MinorSelection,
    cohomology,
    det_complex,
    det_degree,
    determinant,
    select_minors,
    sigma_sizes,
    verify_nilpotent,
)
from .errors import (
    DegenerateComplexError,
    ExactnessError,
    InputError,
    NilpotencyError,
    ResultantAnomaly,
    SelectionError,
)
from .graded import (
    build_complex,
    build_differential,
    euler_char,
    euler_genfunc,
    koszul_spec,
    min_exact_R,
    omega_basis,
    omega_dim,
)
from .linalg import ExactMatrix, bareiss_det, rank
from .oracle import PlantSpec, cross_check, plant_common_root, poisson_product_2, random_system
from .parser import ParseError, SystemDocument, format_system, parse_system
from .poly import HPoly, Monomial, PolyMap, mul_monomial, scale_map
from .resultant import (
    ResultantResult,
    resultant,
    resultant_degree,
    resultant_koszul,
    resultant_sylvester,
    sylvester_matrix,
)

__version__ = "0.1.0"
