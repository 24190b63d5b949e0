"""Iteration kernels: point/line SOR sweeps, Thomas solve, solve loop.

Every kernel works on the per-node effective stencils E produced by
``stencils.assemble_stencils`` (shape (ny+1, nx+1, 3, 3)); out-of-domain
offsets hold exact zeros, so neighbor gathers never index outside the
array.  Unknowns live in the inclusive box [i_lo..i_hi] x [j_lo..j_hi]
and are visited in natural row-wise order (j outer, i inner, ascending).

Kernels are numba-jitted unless SORPOISSON_DISABLE_NUMBA is set; the
plain-Python versions remain reachable as ``<kernel>.py_func``.
"""

import numpy as np

from ._numba import NUMBA_ENABLED, njit

DIVERGENCE_GUARD = 1e100

# solve_loop status codes
CONVERGED = 0
DIVERGED = 1
SINGULAR_ROW = 2
MAX_ITERATIONS = 3


@njit(cache=True)
def norm_sq(u):
    """Sum of squares over every node value."""
    s = 0.0
    for j in range(u.shape[0]):
        for i in range(u.shape[1]):
            s += u[j, i] * u[j, i]
    return s


@njit(cache=True)
def point_sweep(u, E, rhs, i_lo, i_hi, j_lo, j_hi, omega):
    """One in-place point-SOR sweep; relaxation applied per node."""
    for j in range(j_lo, j_hi + 1):
        for i in range(i_lo, i_hi + 1):
            s = 0.0
            for b in range(3):
                for a in range(3):
                    if b == 1 and a == 1:
                        continue
                    w = E[j, i, b, a]
                    if w != 0.0:
                        s += w * u[j + b - 1, i + a - 1]
            cand = (rhs[j, i] - s) / E[j, i, 1, 1]
            u[j, i] = (1.0 - omega) * u[j, i] + omega * cand


@njit(cache=True)
def thomas(lo, dg, up, rr, xx, n):
    """Solve the tridiagonal system in place into xx.

    dg/lo/rr are read-only; up is overwritten with elimination factors.
    Returns 0 on success, 1 on a pivot below 1e-300.
    """
    piv = dg[0]
    if abs(piv) < 1e-300:
        return 1
    xx[0] = rr[0] / piv
    for k in range(1, n):
        up[k - 1] = up[k - 1] / piv
        piv = dg[k] - lo[k] * up[k - 1]
        if abs(piv) < 1e-300:
            return 1
        xx[k] = (rr[k] - lo[k] * xx[k - 1]) / piv
    for k in range(n - 2, -1, -1):
        xx[k] -= up[k] * xx[k + 1]
    return 0


@njit(cache=True)
def line_sweep(u, E, rhs, i_lo, i_hi, j_lo, j_hi, omega, lo, dg, up, rr, xx):
    """One in-place line-SOR sweep, rows bottom to top.

    For each row the tridiagonal system couples the row unknowns through
    the dj=0 stencil entries; couplings to fixed Dirichlet columns and to
    the rows below (new) / above (old) go to the right-hand side.  The
    relaxation is folded into the right-hand side:
    T u_new = (1-omega) T u_old + omega (rhs - off_row_terms).
    Returns 0, or 1 if a row system hit a zero pivot.
    """
    n = i_hi - i_lo + 1
    for j in range(j_lo, j_hi + 1):
        for k in range(n):
            i = i_lo + k
            s = 0.0
            for b in range(0, 3, 2):
                for a in range(3):
                    w = E[j, i, b, a]
                    if w != 0.0:
                        s += w * u[j + b - 1, i + a - 1]
            w_west = E[j, i, 1, 0]
            w_east = E[j, i, 1, 2]
            lo_k = 0.0
            up_k = 0.0
            if w_west != 0.0:
                if i - 1 >= i_lo:
                    lo_k = w_west
                else:
                    s += w_west * u[j, i - 1]
            if w_east != 0.0:
                if i + 1 <= i_hi:
                    up_k = w_east
                else:
                    s += w_east * u[j, i + 1]
            lo[k] = lo_k
            up[k] = up_k
            dg[k] = E[j, i, 1, 1]
            rr[k] = rhs[j, i] - s
        for k in range(n):
            i = i_lo + k
            t = dg[k] * u[j, i]
            if k > 0:
                t += lo[k] * u[j, i - 1]
            if k < n - 1:
                t += up[k] * u[j, i + 1]
            rr[k] = (1.0 - omega) * t + omega * rr[k]
        if thomas(lo, dg, up, rr, xx, n) != 0:
            return 1
        for k in range(n):
            u[j, i_lo + k] = xx[k]
    return 0


@njit(cache=True)
def solve_loop(
    u, E, rhs, i_lo, i_hi, j_lo, j_hi, omega, tol, max_iters, use_line, lo, dg, up, rr, xx
):
    """Sweep until the full-array L2 norm drops below tol.

    Returns (iterations, final_norm, status) with status one of
    CONVERGED / DIVERGED / SINGULAR_ROW / MAX_ITERATIONS.
    """
    nrm = np.sqrt(norm_sq(u))
    if nrm < tol:
        return 0, nrm, CONVERGED
    it = 0
    while it < max_iters:
        if use_line:
            if line_sweep(u, E, rhs, i_lo, i_hi, j_lo, j_hi, omega, lo, dg, up, rr, xx) != 0:
                return it, nrm, SINGULAR_ROW
        else:
            point_sweep(u, E, rhs, i_lo, i_hi, j_lo, j_hi, omega)
        it += 1
        nrm = np.sqrt(norm_sq(u))
        if nrm < tol:
            return it, nrm, CONVERGED
        if nrm > DIVERGENCE_GUARD:
            return it, nrm, DIVERGED
    return it, nrm, MAX_ITERATIONS
