"""Independent ground truth: dense sweep operator and spectral radius.

One homogeneous SOR sweep is linear in the field, so probing it with
unit basis fields assembles the dense iteration matrix M (column k is
the sweep applied to basis field k).  Its spectral radius is the
asymptotic convergence factor, measured here with the in-repo QR
eigensolver.  Probing the actual sweep kernel, rather than assembling
matrices symbolically, makes the oracle immune to any drift between the
stencil/ghost code and a separate operator description: whatever the
solver does is what gets measured.
"""

from dataclasses import dataclass

import numpy as np

from . import kernels
from .eigen import eigvals
from .errors import TooManyUnknownsError
from .grid import unknown_box
from .solvers import LINE
from .stencils import assemble_stencils

MAX_UNKNOWNS = 4096
_PROBE_CHECKS = 5
_PROBE_RTOL = 1e-12


@dataclass
class SweepMatrix:
    """Dense one-sweep operator over the unknowns.

    ``matrix[r, c]`` maps unknown c (before) to unknown r (after);
    unknowns are ordered row-major over the inclusive index box."""

    matrix: np.ndarray
    i_lo: int
    i_hi: int
    j_lo: int
    j_hi: int

    @property
    def n(self):
        return self.matrix.shape[0]

    def apply_to_field(self, values):
        """M @ (unknown part of values), reshaped back to the box."""
        box = values[self.j_lo : self.j_hi + 1, self.i_lo : self.i_hi + 1]
        return (self.matrix @ box.ravel()).reshape(box.shape)


def _sweep_once(values, E, rhs, box, variant, omega, scratch):
    i_lo, i_hi, j_lo, j_hi = box
    if variant == LINE:
        status = kernels.line_sweep(values, E, rhs, i_lo, i_hi, j_lo, j_hi, omega, *scratch)
        if status != 0:
            raise RuntimeError("singular row system while probing the sweep operator")
    else:
        kernels.point_sweep(values, E, rhs, i_lo, i_hi, j_lo, j_hi, omega)


def build_sweep_matrix(grid, bcs, scheme, variant, omega):
    """Probe the homogeneous sweep with unit basis fields.

    The assembled matrix is verified against the sweep on a few random
    fields (1e-12 relative); a failure would mean the sweep is not
    linear and the oracle inapplicable.
    """
    box = unknown_box(grid, bcs)
    i_lo, i_hi, j_lo, j_hi = box
    ni = i_hi - i_lo + 1
    nj = j_hi - j_lo + 1
    n = ni * nj
    if n > MAX_UNKNOWNS:
        raise TooManyUnknownsError(f"{n} unknowns exceed the dense-oracle guard {MAX_UNKNOWNS}")
    E = assemble_stencils(grid, bcs, scheme)
    rhs = np.zeros(grid.shape)
    scratch = tuple(np.empty(grid.nx + 1) for _ in range(5))
    m = np.empty((n, n))
    values = np.zeros(grid.shape)
    for c in range(n):
        values[:] = 0.0
        values[j_lo + c // ni, i_lo + c % ni] = 1.0
        _sweep_once(values, E, rhs, box, variant, omega, scratch)
        m[:, c] = values[j_lo : j_hi + 1, i_lo : i_hi + 1].ravel()

    sweep_matrix = SweepMatrix(m, i_lo, i_hi, j_lo, j_hi)
    rng = np.random.default_rng(20240317)
    for _ in range(_PROBE_CHECKS):
        values[:] = 0.0
        probe = rng.standard_normal((nj, ni))
        values[j_lo : j_hi + 1, i_lo : i_hi + 1] = probe
        expected = sweep_matrix.matrix @ probe.ravel()
        _sweep_once(values, E, rhs, box, variant, omega, scratch)
        got = values[j_lo : j_hi + 1, i_lo : i_hi + 1].ravel()
        err = np.linalg.norm(got - expected)
        if err > _PROBE_RTOL * max(np.linalg.norm(got), 1.0):
            raise RuntimeError(f"sweep is not linear: probe error {err:.3e}")
    return sweep_matrix


def spectral_radius(matrix):
    """Largest eigenvalue modulus of a SweepMatrix (or bare array)."""
    m = matrix.matrix if isinstance(matrix, SweepMatrix) else np.asarray(matrix, dtype=float)
    return float(np.max(np.abs(eigvals(m))))


def brute_force_omega(grid, bcs, scheme, variant, omega_grid):
    """Spectral radius over an omega grid; returns (minimizer, radius).

    This is the formula-free reference: nothing here knows about any
    closed-form optimum.
    """
    omegas = [float(w) for w in omega_grid]
    if not omegas:
        raise ValueError("omega_grid must be non-empty")
    for w in omegas:
        if not 0.0 < w < 2.0:
            raise ValueError(f"omega {w} outside (0, 2)")
    best_w = None
    best_rho = np.inf
    for w in omegas:
        rho = spectral_radius(build_sweep_matrix(grid, bcs, scheme, variant, w))
        if rho < best_rho:
            best_rho = rho
            best_w = w
    return best_w, best_rho


def radius_curve(grid, bcs, scheme, variant, omega_grid):
    """(omega, spectral_radius) rows for the oracle CLI report."""
    return [
        (float(w), spectral_radius(build_sweep_matrix(grid, bcs, scheme, variant, float(w))))
        for w in omega_grid
    ]
