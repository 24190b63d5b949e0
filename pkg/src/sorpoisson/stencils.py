"""Discretization stencils and ghost-node closure.

Two schemes are supported on the (2s+1)-point compact footprint:

* ``central2`` -- the standard 5-point second-order Laplacian, scaled by
  dx^2:  (u_W + u_E) + beta^2 (u_S + u_N) - 2(1+beta^2) u_C = dx^2 f.
* ``hoc`` -- the fourth-order 9-point compact scheme:
  (10-2b2)(u_W+u_E) + (10b2-2)(u_S+u_N) + (1+b2)(corners - 20 u_C) = rhs
  with b2 = beta^2.

Neumann and Robin edges are closed with ghost nodes eliminated through
the centered first derivative, e.g. on the right edge with condition
c*u + d*du/dx = 0:  u_{N+1} = u_{N-1} - (2 dx c/d) u_N.  Corner ghosts
needed by the 9-point stencil apply the x and y closures sequentially
(the two eliminations commute).
"""

from dataclasses import dataclass

import numpy as np

from .grid import unknown_box

CENTRAL2 = "central2"
HOC = "hoc"
SCHEMES = (CENTRAL2, HOC)


@dataclass(frozen=True)
class StencilWeights:
    """Raw 3x3 stencil weights; ``ew``/``ns``/``corner`` are shared by
    symmetry.  Row sum is zero for both schemes (constants are in the
    null space of the homogeneous operator)."""

    center: float
    ew: float
    ns: float
    corner: float

    def as_array(self):
        """3x3 array indexed [dj+1, di+1]."""
        w = np.array(
            [
                [self.corner, self.ns, self.corner],
                [self.ew, self.center, self.ew],
                [self.corner, self.ns, self.corner],
            ]
        )
        return w


def weights(scheme, beta):
    """Stencil weights for ``scheme`` at spacing ratio ``beta`` > 0."""
    if beta <= 0:
        raise ValueError(f"beta must be positive, got {beta}")
    b2 = beta * beta
    if scheme == CENTRAL2:
        return StencilWeights(center=-2.0 * (1.0 + b2), ew=1.0, ns=b2, corner=0.0)
    if scheme == HOC:
        return StencilWeights(
            center=-20.0 * (1.0 + b2),
            ew=10.0 - 2.0 * b2,
            ns=10.0 * b2 - 2.0,
            corner=1.0 + b2,
        )
    raise ValueError(f"unknown scheme {scheme!r}")


def ghost_value(edge, inner_value, boundary_value, spacing, side):
    """Value of the fictitious node one step outside a Neumann/Robin edge.

    Parameters
    ----------
    edge : EdgeCondition
        Must be Neumann or Robin.
    inner_value : float
        Value one step inside the boundary (u_{N-1} or u_1).
    boundary_value : float
        Value on the boundary node itself (u_N or u_0).
    spacing : float
        dx for left/right edges, dy for bottom/top.
    side : str
        "low" (left/bottom) or "high" (right/top); fixes the sign of the
        centered-derivative elimination.
    """
    if edge.is_dirichlet:
        raise ValueError("ghost node undefined on a Dirichlet edge")
    if edge.coef_du == 0.0:
        raise ValueError("ghost closure needs a non-zero derivative coefficient")
    g = 2.0 * spacing * edge.coef_u / edge.coef_du
    if side == "low":
        return inner_value + g * boundary_value
    if side == "high":
        return inner_value - g * boundary_value
    raise ValueError(f"side must be 'low' or 'high', got {side!r}")


def _ghost_coef(edge, spacing):
    """Closure coefficient g with u_ghost = u_inner +/- g*u_boundary."""
    if not edge.is_unknown:
        return 0.0
    return 2.0 * spacing * edge.coef_u / edge.coef_du


def assemble_stencils(grid, bcs, scheme):
    """Per-node effective stencils with ghost nodes eliminated.

    Returns an array E of shape (ny+1, nx+1, 3, 3) where E[j, i, b, a]
    multiplies u[j+b-1, i+a-1] in the discrete equation

        sum_{a,b} E[j, i, b, a] * u[j+b-1, i+a-1] = rhs[j, i]

    for every unknown node (i, j).  Out-of-domain offsets and rows of
    fixed (Dirichlet) nodes hold zeros.  Ghost contributions that fold
    back onto the node itself are absorbed into the center weight, so a
    Gauss-Seidel step solves each node equation exactly.
    """
    nx, ny = grid.nx, grid.ny
    w = weights(scheme, grid.beta).as_array()
    gxl = _ghost_coef(bcs.left, grid.dx)
    gxh = _ghost_coef(bcs.right, grid.dx)
    gyl = _ghost_coef(bcs.bottom, grid.dy)
    gyh = _ghost_coef(bcs.top, grid.dy)
    i_lo, i_hi, j_lo, j_hi = unknown_box(grid, bcs)

    E = np.zeros((ny + 1, nx + 1, 3, 3))
    for j in range(j_lo, j_hi + 1):
        for i in range(i_lo, i_hi + 1):
            for dj in (-1, 0, 1):
                for di in (-1, 0, 1):
                    wgt = w[dj + 1, di + 1]
                    if wgt == 0.0:
                        continue
                    for ii, jj, c in _fold(i + di, j + dj, wgt, nx, ny, gxl, gxh, gyl, gyh):
                        E[j, i, jj - j + 1, ii - i + 1] += c
    return E


def _fold(ii, jj, coef, nx, ny, gxl, gxh, gyl, gyh):
    """Expand a (possibly outside) node into in-domain contributions."""
    if ii == -1:
        terms = [(1, jj, coef), (0, jj, coef * gxl)]
    elif ii == nx + 1:
        terms = [(nx - 1, jj, coef), (nx, jj, -coef * gxh)]
    else:
        terms = [(ii, jj, coef)]
    out = []
    for i2, j2, c in terms:
        if jj == -1:
            out.append((i2, 1, c))
            out.append((i2, 0, c * gyl))
        elif jj == ny + 1:
            out.append((i2, ny - 1, c))
            out.append((i2, ny, -c * gyh))
        else:
            out.append((i2, j2, c))
    return out
