"""Closed-form optimal relaxation parameters for every scheme/variant.

For the quadratic-family methods (point and line SOR of the second-order
scheme, line SOR of the compact scheme) the dominant eigenvalue solves
alpha^2 - r w alpha + (w - 1) = 0, so

    w_opt = 2 / (1 + sqrt(1 - r^2)),   rho(w_opt) = w_opt - 1,

with r the scheme-specific mode amplification built from the extremal
wavenumber modes (cos for trigonometric modes, cosh for hyperbolic ones,
1 for the zero mode of a double-Neumann direction).

Point SOR of the compact scheme leads to a quartic in alpha; its optimum
follows the small-h perturbation expansion w_opt = 2 - k1 h - k2 h^2
with h = dx, where k1 balances the fastest real and complex root
families and k2 matches their second-order terms.  ``quartic_moduli``
exposes the exact quartic roots for diagnostics.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import FormulaDomainError, NonConvergentConfigError
from .robin import HYPER, TRIG, ZERO, WavenumberMode, select_wavenumber
from .solvers import LINE, POINT
from .stencils import CENTRAL2, HOC

__all__ = [
    "WavenumberMode",
    "HocConstants",
    "OmegaPrediction",
    "r_point_2nd",
    "r_line_2nd",
    "r_line_hoc",
    "omega_from_r",
    "omega_point_hoc",
    "quartic_moduli",
    "predict",
]


@dataclass(frozen=True)
class HocConstants:
    """Intermediate quantities of the compact-scheme perturbation
    expansion, exposed for diagnostic reports."""

    c1: float
    c2: float
    p: float
    q: float
    delta_kk: float
    k1: float
    k2: float
    A: float
    B: float
    D: float
    R: float


@dataclass(frozen=True)
class OmegaPrediction:
    """Predicted optimum and (when available) spectral radius.

    ``radius_is_approximate`` marks the compact point-SOR prediction,
    whose radius comes from a truncated expansion; quadratic-family
    radii are exact (w_opt - 1).
    """

    omega_opt: float
    spectral_radius: float | None = None
    radius_is_approximate: bool = False
    r: float | None = None
    kx: WavenumberMode | None = None
    ky: WavenumberMode | None = None
    hoc: HocConstants | None = None


def r_point_2nd(kx, ky, grid):
    """Mode amplification of second-order point SOR:
    (Cx + beta^2 Cy) / (1 + beta^2)."""
    b2 = grid.beta * grid.beta
    return (kx.factor(grid.dx) + b2 * ky.factor(grid.dy)) / (1.0 + b2)


def r_line_2nd(kx, ky, grid):
    """Mode amplification of second-order line SOR:
    beta^2 Cy / (1 + beta^2 - Cx)."""
    b2 = grid.beta * grid.beta
    den = 1.0 + b2 - kx.factor(grid.dx)
    if den <= 0.0:
        raise FormulaDomainError(f"line-SOR denominator {den} <= 0 (hyperbolic kx too large)")
    return b2 * ky.factor(grid.dy) / den


def r_line_hoc(kx, ky, grid):
    """Mode amplification of compact-scheme line SOR."""
    b2 = grid.beta * grid.beta
    cx = kx.factor(grid.dx)
    den = 5.0 * (1.0 + b2) - (5.0 - b2) * cx
    if den <= 0.0:
        raise FormulaDomainError(f"compact line-SOR denominator {den} <= 0")
    return (5.0 * b2 - 1.0 + (1.0 + b2) * cx) / den * ky.factor(grid.dy)


def omega_from_r(r, kx=None, ky=None):
    """Quadratic-family optimum 2/(1 + sqrt(1-r^2)) with exact radius
    w - 1.  Raises NonConvergentConfigError for |r| >= 1 (r = 1 is the
    all-Neumann singular case; |r| > 1 diverges outright)."""
    if abs(r) >= 1.0:
        raise NonConvergentConfigError(f"|r| = {abs(r)} >= 1: no convergent omega exists")
    w = 2.0 / (1.0 + math.sqrt(1.0 - r * r))
    return OmegaPrediction(omega_opt=w, spectral_radius=w - 1.0, r=r, kx=kx, ky=ky)


def _hoc_constants(kx, ky, grid):
    b2 = grid.beta * grid.beta
    c1 = (5.0 - b2) / (10.0 * (1.0 + b2))
    c2 = 0.8 - 2.0 * c1
    p = kx.factor(grid.dx)
    q = ky.factor(grid.dy)
    ksq = kx.k_squared_signed() + ky.k_squared_signed()
    delta_sq = 0.8 * (1.0 + 8.0 * c1) * ksq
    if delta_sq <= 0.0:
        raise FormulaDomainError(
            "perturbation scale delta^2 <= 0 (hyperbolic kx exceeds ky); expansion invalid"
        )
    delta = math.sqrt(delta_sq)
    # sign(c1) = 0 counts as +; both branches coincide at c1 = 0
    if c1 >= 0.0:
        k1 = delta * (1.0 + 10.0 * c1) / math.sqrt((1.0 + 14.0 * c1) * (1.0 + 6.0 * c1))
    else:
        k1 = delta
    rk_sq = k1 * k1 - delta_sq
    if rk_sq < 0.0:
        if rk_sq < -1e-12 * delta_sq:
            raise FormulaDomainError("k1^2 < delta^2: real-root family never splits off")
        rk_sq = 0.0
    rk = math.sqrt(rk_sq)
    dprime = (1.0 + 20.0 * c1 * c2) * q * q + 4.0 * c1 * c1 * p * p * q * q + 100.0 * c1 * c1
    sd = math.sqrt(dprime)
    if p == 0.0:
        raise FormulaDomainError("p = 0: x-coupling vanishes, expansion constants undefined")
    A = 0.5 - abs(c1) * p * q / sd
    B = 0.25 - c1 * c1 * p * p * q * q / dprime
    sgn = 1.0 if c1 >= 0.0 else -1.0
    D = 0.5 * (B + sgn * ((2.0 * c1 * p * p + 5.0 * c2) * B * q + c1 * p * p * q) / (p * sd))
    k2 = -(k1 * k1 / (2.0 * A)) * (rk * A * A + A * k1 + 2.0 * rk * D) / (rk + k1)
    return HocConstants(c1=c1, c2=c2, p=p, q=q, delta_kk=delta, k1=k1, k2=k2, A=A, B=B, D=D, R=rk)


def omega_point_hoc(kx, ky, grid):
    """Compact-scheme point-SOR optimum from the second-order expansion
    w = 2 - k1 h - k2 h^2, h = dx.  The attached radius estimate
    1 - 2 beta_m h - 2 gamma_m h^2 is O(h^3)-accurate only and flagged
    approximate."""
    hc = _hoc_constants(kx, ky, grid)
    h = grid.dx
    w = 2.0 - hc.k1 * h - hc.k2 * h * h
    if not 0.0 < w < 2.0:
        raise FormulaDomainError(f"expansion left (0, 2): omega = {w}; h too large for this mode")
    beta_m = hc.A * hc.k1
    gamma_m = hc.A * hc.k2 + hc.D * hc.k1 * hc.k1
    rho = 1.0 - 2.0 * beta_m * h - 2.0 * gamma_m * h * h
    return OmegaPrediction(
        omega_opt=w,
        spectral_radius=rho,
        radius_is_approximate=True,
        kx=kx,
        ky=ky,
        hoc=hc,
    )


def omega_point_hoc_first_order(kx, ky, grid):
    """First-order truncation w = 2 - k1 h (the less accurate published
    baseline; kept for the iteration-cost comparison experiments)."""
    hc = _hoc_constants(kx, ky, grid)
    w = 2.0 - hc.k1 * grid.dx
    if not 0.0 < w < 2.0:
        raise FormulaDomainError(f"first-order expansion left (0, 2): omega = {w}")
    return OmegaPrediction(omega_opt=w, radius_is_approximate=True, kx=kx, ky=ky, hoc=hc)


def quartic_moduli(omega, p, q, c1):
    """Squared moduli (descending) of the four roots of the compact
    point-SOR characteristic quartic at relaxation parameter omega.

    Roots come from the companion matrix (numpy.roots), robust near the
    root collisions that define the optimum.
    """
    if not 0.0 < omega < 2.0:
        raise ValueError(f"omega must lie in (0, 2), got {omega}")
    c2 = 0.8 - 2.0 * c1
    w = omega
    coeffs = [
        1.0,
        -0.4 * q * w * (c1 * p * p * w + 5.0 * c2),
        2.0 * (w - 1.0) + (c2 * c2 * q * q - 4.0 * c1 * c1 * p * p - p * p * q * q / 25.0) * w * w,
        -0.4 * q * w * (c1 * p * p * w + 5.0 * c2 * (w - 1.0)),
        (w - 1.0) ** 2,
    ]
    roots = np.roots(coeffs)
    moduli = np.sort(np.abs(roots) ** 2)[::-1]
    return [float(v) for v in moduli]


def resolve_modes(grid, bcs):
    """Wavenumber modes for both directions of a boundary set."""
    kx = select_wavenumber(bcs.left, bcs.right, grid.nx)
    ky = select_wavenumber(bcs.bottom, bcs.top, grid.ny)
    return kx, ky


def predict(grid, bcs, scheme, variant):
    """Optimal relaxation parameter for (grid, bcs, scheme, variant).

    Resolves the extremal wavenumber mode of each direction from its
    edge pair, then dispatches to the matching closed form.
    """
    if not bcs.solvable:
        raise NonConvergentConfigError(
            "all four edges Neumann: r = 1, omega_opt = 2 is not convergent"
        )
    kx, ky = resolve_modes(grid, bcs)
    if scheme == CENTRAL2 and variant == POINT:
        return omega_from_r(r_point_2nd(kx, ky, grid), kx, ky)
    if scheme == CENTRAL2 and variant == LINE:
        return omega_from_r(r_line_2nd(kx, ky, grid), kx, ky)
    if scheme == HOC and variant == LINE:
        return omega_from_r(r_line_hoc(kx, ky, grid), kx, ky)
    if scheme == HOC and variant == POINT:
        return omega_point_hoc(kx, ky, grid)
    raise ValueError(f"unknown scheme/variant combination ({scheme!r}, {variant!r})")
