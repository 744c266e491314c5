"""Eigenvalue bounds for the Laplacian on hyperbolic space, at desk scale.

Closed-form bound constants, a certified Chebyshev/finite-difference
eigenvalue sweep for the separated strip family, counting-function and
Riesz-mean bound verification, and quadrature checks of the dual
kinetic-energy inequality.
"""

from .constants import (
    EXCESS,
    constant_ratio,
    counting_constant,
    gamma_fn,
    kinetic_constant,
    lt_best_known,
    lt_classical,
    product_counting_constant,
)
from .counting import (
    BoundReport,
    CountingFunction,
    counting_rhs,
    polya_rhs,
    polya_rows,
    product_counting_rhs,
    product_riesz_rhs,
    ratio_rows,
    verify_bound,
)
from .discretize import (
    ChebOperator,
    Interval,
    PotentialSpec,
    TridiagOperator,
    assemble_cheb,
    assemble_fd,
    cheb_diff_matrix,
    cheb_nodes,
)
from .eigen import Spectrum, dense_eigenvalues, sturm_count, tridiag_eigenvalues
from .errors import (
    CertificationError,
    ConvergenceError,
    IncompleteTableError,
    QuadratureError,
    RealityError,
)
from .lt_verify import (
    BoxPotential,
    LTReport,
    ProductDomain,
    SobolevReport,
    SobolevTrialFunction,
    TRIAL_NAMES,
    family_table,
    hyperbolic_volume,
    lt_check,
    potential_integral,
    sobolev_check,
    trial_profile,
)
from .sl_family import (
    EigenTable,
    SLProblem,
    find_ell_max,
    lambda_from_nu,
    nu_from_lambda,
    solve_certified,
    solve_problem,
    sweep,
    table_rows_from_csv,
)

__version__ = "0.1.0"

__all__ = [
    "EXCESS",
    "BoundReport",
    "BoxPotential",
    "CertificationError",
    "ChebOperator",
    "ConvergenceError",
    "CountingFunction",
    "EigenTable",
    "IncompleteTableError",
    "Interval",
    "LTReport",
    "PotentialSpec",
    "ProductDomain",
    "QuadratureError",
    "RealityError",
    "SLProblem",
    "SobolevReport",
    "SobolevTrialFunction",
    "Spectrum",
    "TridiagOperator",
    "TRIAL_NAMES",
    "assemble_cheb",
    "assemble_fd",
    "cheb_diff_matrix",
    "cheb_nodes",
    "constant_ratio",
    "counting_constant",
    "counting_rhs",
    "dense_eigenvalues",
    "family_table",
    "find_ell_max",
    "gamma_fn",
    "hyperbolic_volume",
    "kinetic_constant",
    "lambda_from_nu",
    "lt_best_known",
    "lt_check",
    "lt_classical",
    "nu_from_lambda",
    "polya_rhs",
    "polya_rows",
    "potential_integral",
    "product_counting_constant",
    "product_counting_rhs",
    "product_riesz_rhs",
    "ratio_rows",
    "sobolev_check",
    "solve_certified",
    "solve_problem",
    "sturm_count",
    "sweep",
    "table_rows_from_csv",
    "trial_profile",
    "tridiag_eigenvalues",
    "verify_bound",
]
