"""Point-SOR and line-SOR drivers with convergence detection.

The convergence criterion follows the reference protocol: iterate until
the L2 norm over all nodes falls below the fourth power of the
double-precision machine epsilon, starting from the all-ones guess.
Since the acceptance experiments use zero source and boundary data, the
iterate itself is the error.
"""

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import DivergedError, NonConvergentConfigError, NotConvergedError, SingularSystemError
from .grid import Field, initial_guess
from .stencils import CENTRAL2, HOC, assemble_stencils

POINT = "point"
LINE = "line"
VARIANTS = (POINT, LINE)

# (2^-52)^4 exactly, not the rounded 1e-63
DEFAULT_TOLERANCE = (2.0**-52) ** 4
DEFAULT_MAX_ITERATIONS = 1_000_000


@dataclass(frozen=True)
class SolverConfig:
    """Scheme x variant x omega plus the stopping rule."""

    scheme: str
    variant: str
    omega: float
    tolerance: float = DEFAULT_TOLERANCE
    max_iterations: int = DEFAULT_MAX_ITERATIONS

    def __post_init__(self):
        if self.scheme not in (CENTRAL2, HOC):
            raise ValueError(f"unknown scheme {self.scheme!r}")
        if self.variant not in VARIANTS:
            raise ValueError(f"unknown variant {self.variant!r}")
        if not 0.0 < self.omega < 2.0:
            raise ValueError(f"omega must lie in (0, 2), got {self.omega}")
        if self.tolerance <= 0.0:
            raise ValueError("tolerance must be positive")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be at least 1")


@dataclass(frozen=True)
class SolveReport:
    iterations: int
    final_norm: float
    converged: bool


def _scratch(grid):
    n = grid.nx + 1
    return tuple(np.empty(n) for _ in range(5))


def _check_field(field, grid):
    if field.values.shape != grid.shape:
        raise ValueError(f"field shape {field.values.shape} != grid {grid.shape}")


def point_sor_sweep(field, grid, bcs, scheme, omega, rhs=None):
    """One in-place point-SOR sweep over the unknowns of ``field``."""
    _check_field(field, grid)
    E = assemble_stencils(grid, bcs, scheme)
    if rhs is None:
        rhs = np.zeros(grid.shape)
    kernels.point_sweep(
        field.values, E, rhs, field.i_lo, field.i_hi, field.j_lo, field.j_hi, omega
    )


def line_sor_sweep(field, grid, bcs, scheme, omega, rhs=None):
    """One in-place line-SOR sweep (row tridiagonal solves, bottom to top)."""
    _check_field(field, grid)
    E = assemble_stencils(grid, bcs, scheme)
    if rhs is None:
        rhs = np.zeros(grid.shape)
    status = kernels.line_sweep(
        field.values,
        E,
        rhs,
        field.i_lo,
        field.i_hi,
        field.j_lo,
        field.j_hi,
        omega,
        *_scratch(grid),
    )
    if status != 0:
        raise SingularSystemError("zero pivot in a line-SOR row system")


def tridiagonal_solve(lower, diag, upper, rhs):
    """Solve the tridiagonal system A x = rhs.

    ``lower[k]`` couples x[k] to x[k-1], ``upper[k]`` to x[k+1];
    lower[0] and upper[-1] are ignored.  Raises SingularSystemError on a
    pivot smaller than 1e-300.
    """
    lower = np.asarray(lower, dtype=float)
    diag = np.asarray(diag, dtype=float)
    upper = np.asarray(upper, dtype=float)
    rhs = np.asarray(rhs, dtype=float)
    n = diag.shape[0]
    if not (lower.shape[0] == upper.shape[0] == rhs.shape[0] == n) or n < 1:
        raise ValueError("lower, diag, upper and rhs must share one length >= 1")
    x = np.empty(n)
    if kernels.thomas(lower, diag, upper.copy(), rhs, x, n) != 0:
        raise SingularSystemError("tridiagonal pivot below 1e-300")
    return x


def build_rhs(grid, scheme, source=None):
    """Discrete right-hand side from a nodal source array.

    central2 uses dx^2 * f; hoc uses the compact source average
    dx^2/2 * (8 f_C + f_W + f_E + f_S + f_N) with edge values mirrored
    (fourth-order for beta = 1; plumbing untested against published
    results, which all use f = 0).
    """
    if source is None:
        return np.zeros(grid.shape)
    f = np.asarray(source, dtype=float)
    if f.shape != grid.shape:
        raise ValueError(f"source shape {f.shape} != grid {grid.shape}")
    hx2 = grid.dx * grid.dx
    if scheme == CENTRAL2:
        return hx2 * f
    pad = np.pad(f, 1, mode="reflect")
    core = 8.0 * f + pad[:-2, 1:-1] + pad[2:, 1:-1] + pad[1:-1, :-2] + pad[1:-1, 2:]
    return 0.5 * hx2 * core


def solve(grid, bcs, config, source=None, boundary_values=None, start=None):
    """Run SOR from the all-ones initial guess until convergence.

    Parameters
    ----------
    grid, bcs : GridSpec, BoundarySet
    config : SolverConfig
    source, boundary_values : optional plumbing for inhomogeneous
        problems (see ``build_rhs`` / ``initial_guess``).
    start : Field, optional
        Iterate to start from instead of the standard initial guess.

    Returns
    -------
    SolveReport

    Raises
    ------
    NonConvergentConfigError
        For all-Neumann boundary sets (singular problem).
    NotConvergedError, DivergedError
        Carry the partial report in ``.report``.
    """
    if not bcs.solvable:
        raise NonConvergentConfigError(
            "all four edges Neumann: solution not unique, no omega converges"
        )
    field = initial_guess(grid, bcs, boundary_values) if start is None else start
    _check_field(field, grid)
    E = assemble_stencils(grid, bcs, config.scheme)
    rhs = build_rhs(grid, config.scheme, source)
    iterations, final_norm, status = kernels.solve_loop(
        field.values,
        E,
        rhs,
        field.i_lo,
        field.i_hi,
        field.j_lo,
        field.j_hi,
        config.omega,
        config.tolerance,
        config.max_iterations,
        config.variant == LINE,
        *_scratch(grid),
    )
    report = SolveReport(iterations, final_norm, status == kernels.CONVERGED)
    if status == kernels.DIVERGED:
        raise DivergedError(f"norm {final_norm:.3e} exceeded 1e100", report)
    if status == kernels.SINGULAR_ROW:
        raise SingularSystemError("zero pivot in a line-SOR row system")
    if status == kernels.MAX_ITERATIONS:
        raise NotConvergedError(
            f"not converged after {iterations} sweeps (norm {final_norm:.3e})", report
        )
    return report
