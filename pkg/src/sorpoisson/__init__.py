"""SOR solvers for the 2-D Poisson equation on rectangular grids, with
closed-form optimal relaxation parameters for Dirichlet, Neumann and
Robin boundary conditions, validated by a dense spectral-radius oracle.
"""

from ._numba import NUMBA_ENABLED
from .grid import (
    BoundarySet,
    EdgeCondition,
    Field,
    GridSpec,
    initial_guess,
    l2_norm,
    make_field,
    make_grid,
)
from .omega import OmegaPrediction, WavenumberMode, predict
from .oracle import brute_force_omega, build_sweep_matrix, spectral_radius
from .robin import select_wavenumber
from .solvers import (
    DEFAULT_TOLERANCE,
    LINE,
    POINT,
    SolveReport,
    SolverConfig,
    line_sor_sweep,
    point_sor_sweep,
    solve,
    tridiagonal_solve,
)
from .stencils import CENTRAL2, HOC, ghost_value, weights

__version__ = "0.1.0"

__all__ = [
    "NUMBA_ENABLED",
    "BoundarySet",
    "EdgeCondition",
    "Field",
    "GridSpec",
    "initial_guess",
    "l2_norm",
    "make_field",
    "make_grid",
    "OmegaPrediction",
    "WavenumberMode",
    "predict",
    "brute_force_omega",
    "build_sweep_matrix",
    "spectral_radius",
    "select_wavenumber",
    "DEFAULT_TOLERANCE",
    "LINE",
    "POINT",
    "SolveReport",
    "SolverConfig",
    "line_sor_sweep",
    "point_sor_sweep",
    "solve",
    "tridiagonal_solve",
    "CENTRAL2",
    "HOC",
    "ghost_value",
    "weights",
    "__version__",
]
