"""Grid geometry, boundary-condition description and field storage.

The domain is the unit square discretized with ``nx`` cells in x and
``ny`` cells in y, giving ``(nx+1) * (ny+1)`` nodes.  Fields are stored
with j (the y index) as the slow axis, so ``values[j]`` is the
contiguous grid row y = j*dy; this matches the row solve of line SOR.
"""

from dataclasses import dataclass, field

import numpy as np

DIRICHLET = "dirichlet"
NEUMANN = "neumann"
ROBIN = "robin"


@dataclass(frozen=True)
class GridSpec:
    """Uniform rectangular grid on the unit square.

    Attributes
    ----------
    nx, ny : int
        Cell counts; node indices run 0..nx and 0..ny.
    dx, dy : float
        Spacings 1/nx and 1/ny.
    beta : float
        Spacing ratio dx/dy = ny/nx.
    """

    nx: int
    ny: int
    dx: float
    dy: float
    beta: float

    @property
    def shape(self):
        """Node-array shape, j-major: (ny+1, nx+1)."""
        return (self.ny + 1, self.nx + 1)


def make_grid(nx, ny):
    """Build a GridSpec with dx = 1/nx, dy = 1/ny.

    Raises
    ------
    ValueError
        If either cell count is below 3 (no interior otherwise).
    """
    if nx < 3 or ny < 3:
        raise ValueError(f"grid needs at least 3 cells per direction, got ({nx}, {ny})")
    return GridSpec(nx=nx, ny=ny, dx=1.0 / nx, dy=1.0 / ny, beta=ny / nx)


@dataclass(frozen=True)
class EdgeCondition:
    """Boundary condition on one edge: Dirichlet, Neumann or Robin.

    Robin means ``coef_u * u + coef_du * du/dx = 0`` on the edge (x or y
    derivative as appropriate).  Degenerate Robin coefficients normalize
    to Dirichlet (coef_du = 0) or Neumann (coef_u = 0) at construction.
    """

    kind: str
    coef_u: float = 0.0
    coef_du: float = 0.0

    @staticmethod
    def dirichlet():
        return EdgeCondition(DIRICHLET)

    @staticmethod
    def neumann():
        return EdgeCondition(NEUMANN, 0.0, 1.0)

    @staticmethod
    def robin(coef_u, coef_du):
        if coef_u == 0.0 and coef_du == 0.0:
            raise ValueError("Robin condition needs a non-zero coefficient")
        if coef_du == 0.0:
            return EdgeCondition(DIRICHLET)
        if coef_u == 0.0:
            return EdgeCondition(NEUMANN, 0.0, coef_du)
        return EdgeCondition(ROBIN, coef_u, coef_du)

    @property
    def is_dirichlet(self):
        return self.kind == DIRICHLET

    @property
    def is_unknown(self):
        """True if boundary nodes on this edge are solver unknowns."""
        return self.kind != DIRICHLET

    def __str__(self):
        if self.kind == ROBIN:
            return f"robin:{self.coef_u:g},{self.coef_du:g}"
        return self.kind


@dataclass(frozen=True)
class BoundarySet:
    """Per-edge boundary conditions for the rectangle."""

    left: EdgeCondition
    right: EdgeCondition
    bottom: EdgeCondition
    top: EdgeCondition

    @staticmethod
    def all_dirichlet():
        d = EdgeCondition.dirichlet
        return BoundarySet(d(), d(), d(), d())

    @property
    def solvable(self):
        """False when all four edges are Neumann: the continuous problem
        is singular and no SOR parameter converges."""
        return not all(
            e.kind == NEUMANN for e in (self.left, self.right, self.bottom, self.top)
        )


@dataclass
class Field:
    """Node values plus the fixed/unknown split implied by the BCs.

    ``values`` has shape (ny+1, nx+1).  ``fixed`` marks Dirichlet nodes,
    which solvers never write.  Corners between a Dirichlet edge and a
    Neumann/Robin edge count as Dirichlet, so the unknown set is the
    index box [i_lo..i_hi] x [j_lo..j_hi].
    """

    values: np.ndarray
    fixed: np.ndarray
    i_lo: int
    i_hi: int
    j_lo: int
    j_hi: int

    @property
    def unknown_count(self):
        return (self.i_hi - self.i_lo + 1) * (self.j_hi - self.j_lo + 1)


def unknown_box(grid, bcs):
    """Inclusive index bounds (i_lo, i_hi, j_lo, j_hi) of the unknowns."""
    i_lo = 0 if bcs.left.is_unknown else 1
    i_hi = grid.nx if bcs.right.is_unknown else grid.nx - 1
    j_lo = 0 if bcs.bottom.is_unknown else 1
    j_hi = grid.ny if bcs.top.is_unknown else grid.ny - 1
    return i_lo, i_hi, j_lo, j_hi


def make_field(grid, bcs, boundary_values=None):
    """Zero-valued Field with the unknown mask for (grid, bcs).

    ``boundary_values`` optionally seeds the Dirichlet nodes (full node
    array, only fixed entries are read).  Untested against published
    results, which all use homogeneous boundary data.
    """
    i_lo, i_hi, j_lo, j_hi = unknown_box(grid, bcs)
    values = np.zeros(grid.shape)
    fixed = np.ones(grid.shape, dtype=bool)
    fixed[j_lo : j_hi + 1, i_lo : i_hi + 1] = False
    if boundary_values is not None:
        bv = np.asarray(boundary_values, dtype=float)
        if bv.shape != grid.shape:
            raise ValueError(f"boundary_values shape {bv.shape} != {grid.shape}")
        values[fixed] = bv[fixed]
    return Field(values, fixed, i_lo, i_hi, j_lo, j_hi)


def initial_guess(grid, bcs, boundary_values=None):
    """Standard start iterate: 1.0 at every unknown, data (default 0) at
    Dirichlet nodes."""
    fld = make_field(grid, bcs, boundary_values)
    fld.values[~fld.fixed] = 1.0
    return fld


def l2_norm(values):
    """Euclidean norm over all node values (Field or bare array)."""
    if isinstance(values, Field):
        values = values.values
    return float(np.sqrt(np.sum(values * values)))
