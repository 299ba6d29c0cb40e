"""One-dimensional coupling of local elasticity and bond-based peridynamics."""
from .analysis import (
    CONSTANT,
    VHCM_RAMP,
    ErrorField,
    StudyResult,
    VReference,
    continuous_stress,
    convergence_study,
    delta_field,
    delta_max,
    m_study,
    relative_error,
    solve_case,
    v_reference,
)
from .assembly import CouplingScheme, LinearSystem, assemble, nominal_kappa
from .errors import (
    CouplingError,
    DomainTooNarrow,
    GridError,
    GridMismatch,
    InconsistentDofMap,
    NoConvergence,
    NonDivisibleSpacing,
    OverlapOutOfDomain,
    QuadratureFailure,
    SingularMatrix,
    StencilOutOfRange,
    UnknownProblem,
)
from .linalg import Solution, condition_number_2, lu_solve, solve_dense
from .mesh import LOCAL, PERIDYNAMIC, DofMap, Grid, GridConfig, Scheme, build_dof_map, build_grid
from .problems import DIRICHLET_BOTH, MIXED, BoundaryCondition, ManufacturedProblem, catalog_get, problem_names

__version__ = "0.1.0"

__all__ = [
    "CONSTANT",
    "VHCM_RAMP",
    "ErrorField",
    "StudyResult",
    "VReference",
    "continuous_stress",
    "convergence_study",
    "delta_field",
    "delta_max",
    "m_study",
    "relative_error",
    "solve_case",
    "v_reference",
    "CouplingError",
    "DomainTooNarrow",
    "GridError",
    "GridMismatch",
    "InconsistentDofMap",
    "NoConvergence",
    "NonDivisibleSpacing",
    "OverlapOutOfDomain",
    "QuadratureFailure",
    "SingularMatrix",
    "StencilOutOfRange",
    "UnknownProblem",
    "CouplingScheme",
    "LinearSystem",
    "assemble",
    "nominal_kappa",
    "Solution",
    "condition_number_2",
    "lu_solve",
    "solve_dense",
    "LOCAL",
    "PERIDYNAMIC",
    "DofMap",
    "Grid",
    "GridConfig",
    "Scheme",
    "build_dof_map",
    "build_grid",
    "DIRICHLET_BOTH",
    "MIXED",
    "BoundaryCondition",
    "ManufacturedProblem",
    "catalog_get",
    "problem_names",
]
