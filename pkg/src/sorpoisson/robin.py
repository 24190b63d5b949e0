"""Wavenumber selection per direction from the boundary-condition pair.

Closed boundary types pick fixed modes (both Dirichlet -> pi, one
Neumann -> pi/2, both Neumann -> 0).  Robin edges lead to transcendental
characteristic equations: a trigonometric one,

    (ac + s(k)^2 bd) sin k + (ad - bc) s(k) cos k = 0,
    s(k) = N sin(k/N),

whose smallest positive root feeds a cos() amplification factor, and a
hyperbolic one,

    (ac - sh(k)^2 bd) sinh k + (ad - bc) sh(k) cosh k = 0,
    sh(k) = N sinh(k/N),

whose largest positive root (when one exists) feeds a cosh() factor and
takes precedence.  The hyperbolic root count follows the sign pattern of
m = ac/(ad-bc) and n = bd/(ad-bc); for real coefficients the constraint
1 + 4mn >= 0 holds automatically since (ad-bc)^2 + 4abcd = (ad+bc)^2.

Mixed pairs encode the non-Robin edge as Robin(1,0) (Dirichlet) or
Robin(0,1) (Neumann) and reuse the same two equations.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import NoRootError
from .grid import DIRICHLET, NEUMANN

TRIG = "trig"
HYPER = "hyper"
ZERO = "zero"

# positive-root counts for the hyperbolic characteristic equation
ROOTS_ZERO = "zero"
ROOTS_ONE = "one"
ROOTS_AT_MOST_ONE = "at_most_one"
ROOTS_AT_MOST_TWO = "at_most_two"

_SCAN_STEP = math.pi / 1024.0
_BISECT_TOL = 1e-12


@dataclass(frozen=True)
class WavenumberMode:
    """Extremal admissible mode of one direction.

    ``factor(spacing)`` is the amplification term the mode contributes
    to an r formula: cos(k*spacing), cosh(k*spacing), or 1.
    """

    kind: str
    k: float = 0.0

    @staticmethod
    def trig(k):
        if k < 0:
            raise ValueError("trig wavenumber must be >= 0")
        return WavenumberMode(TRIG, float(k))

    @staticmethod
    def hyper(k):
        if k <= 0:
            raise ValueError("hyperbolic wavenumber must be > 0")
        return WavenumberMode(HYPER, float(k))

    @staticmethod
    def zero():
        return WavenumberMode(ZERO, 0.0)

    def factor(self, spacing):
        if self.kind == TRIG:
            return math.cos(self.k * spacing)
        if self.kind == HYPER:
            return math.cosh(self.k * spacing)
        return 1.0

    def k_squared_signed(self):
        """k^2 with the sign flip hyperbolic modes carry in the compact
        perturbation constants (k^2 -> -k^2)."""
        if self.kind == HYPER:
            return -self.k * self.k
        return self.k * self.k

    def __str__(self):
        if self.kind == ZERO:
            return "zero"
        return f"{self.kind}({self.k:.17g})"


@dataclass(frozen=True)
class RobinPair:
    """Robin coefficients of one direction: a u + b u' = 0 on the low
    edge, c u + d u' = 0 on the high edge, with N grid cells."""

    a: float
    b: float
    c: float
    d: float
    n_cells: int

    def __post_init__(self):
        if (self.a == 0.0 and self.b == 0.0) or (self.c == 0.0 and self.d == 0.0):
            raise ValueError("each edge needs at least one non-zero coefficient")
        if self.b == 0.0 and self.d == 0.0:
            raise ValueError("pure Dirichlet pair: handled before root finding")
        if self.n_cells < 3:
            raise ValueError("n_cells must be at least 3")

    @property
    def det(self):
        return self.a * self.d - self.b * self.c


@dataclass(frozen=True)
class RootClassification:
    """Positive-root count bound for the hyperbolic equation, from the
    sign table over m = ac/(ad-bc), n = bd/(ad-bc)."""

    m: float
    n: float
    max_positive_roots: str

    @property
    def bound(self):
        return {ROOTS_ZERO: 0, ROOTS_ONE: 1, ROOTS_AT_MOST_ONE: 1, ROOTS_AT_MOST_TWO: 2}[
            self.max_positive_roots
        ]

    @property
    def guaranteed(self):
        """At least one positive root provably exists."""
        return self.max_positive_roots == ROOTS_ONE


def classify(m, n):
    """Classify (m, n) per the root-count table.

    Requires 1 + 4mn >= 0 (always true for (m, n) built from real edge
    coefficients).  For m + 1 = 0 the origin is a triple root; with the
    admissible n <= 1/4 the function still rises from zero, so n > 0
    behaves like the one-root case and n <= 0 like the rootless one.
    """
    if 1.0 + 4.0 * m * n < 0.0:
        raise ValueError(f"inadmissible pair: 1 + 4mn = {1.0 + 4.0 * m * n} < 0")
    mp = m + 1.0
    if n > 0.0:
        if mp > 0.0:
            kind = ROOTS_ONE
        elif mp == 0.0:
            kind = ROOTS_AT_MOST_ONE
        else:
            kind = ROOTS_AT_MOST_TWO
    else:
        kind = ROOTS_ONE if mp < 0.0 else ROOTS_ZERO
    return RootClassification(m, n, kind)


def trig_char(pair, k):
    """Trigonometric characteristic function (vectorized in k)."""
    s = pair.n_cells * np.sin(np.asarray(k) / pair.n_cells)
    return (pair.a * pair.c + s * s * pair.b * pair.d) * np.sin(k) + pair.det * s * np.cos(k)


def hyper_char(pair, k):
    """Hyperbolic characteristic function, normalized by
    (ad-bc) cosh(k) when ad-bc != 0 to keep magnitudes scannable."""
    k = np.asarray(k, dtype=float)
    sh = pair.n_cells * np.sinh(k / pair.n_cells)
    det = pair.det
    if det != 0.0:
        m = pair.a * pair.c / det
        n = pair.b * pair.d / det
        return (m - n * sh * sh) * np.tanh(k) + sh
    return (pair.a * pair.c - sh * sh * pair.b * pair.d) * np.sinh(k) + det * sh * np.cosh(k)


def _bisect(f, ka, kb):
    fa = f(ka)
    if fa == 0.0:
        return ka
    for _ in range(200):
        km = 0.5 * (ka + kb)
        if kb - ka < _BISECT_TOL:
            return km
        fm = f(km)
        if fm == 0.0:
            return km
        if (fa < 0.0) == (fm < 0.0):
            ka, fa = km, fm
        else:
            kb = km
    return 0.5 * (ka + kb)


def _brackets(f, ks):
    """Sign-change intervals of f over the sorted sample points ks."""
    vals = f(ks)
    out = []
    for idx in range(len(ks) - 1):
        va, vb = vals[idx], vals[idx + 1]
        if va == 0.0:
            out.append((ks[idx], ks[idx]))
        elif (va < 0.0) != (vb < 0.0):
            out.append((ks[idx], ks[idx + 1]))
    if vals[-1] == 0.0:
        out.append((ks[-1], ks[-1]))
    return out


def trig_wavenumber(pair):
    """Smallest positive root of the trigonometric equation in
    (0, pi*N), found by dense sign-change scan plus bisection.

    Raises NoRootError if no sign change exists in the interval.
    """
    f = lambda k: trig_char(pair, k)
    k_max = math.pi * pair.n_cells
    ks = np.arange(_SCAN_STEP, k_max, _SCAN_STEP)
    brs = _brackets(f, ks)
    if not brs:
        raise NoRootError("trigonometric characteristic equation: no root in (0, pi*N)")
    ka, kb = brs[0]
    return float(ka) if ka == kb else float(_bisect(f, ka, kb))


def hyper_wavenumber(pair):
    """Largest positive root of the hyperbolic equation, or None.

    ad - bc = 0 (all coefficients non-zero) has the closed form
    k = N asinh(|a/b| / N).  Otherwise the root-count classification
    gates a dense scan over (0, K]; K starts from a continuum estimate
    of the outermost root and doubles until the window provably covers
    it (or the classification says nothing more can appear).
    """
    if pair.det == 0.0:
        if 0.0 in (pair.a, pair.b, pair.c, pair.d):
            raise ValueError("ad - bc = 0 requires all four coefficients non-zero")
        return pair.n_cells * math.asinh(abs(pair.a / pair.b) / pair.n_cells)

    m = pair.a * pair.c / pair.det
    n = pair.b * pair.d / pair.det
    cls = classify(m, n)
    if cls.bound == 0:
        return None

    f = lambda k: hyper_char(pair, k)
    k_max = _hyper_window(pair, m, n)
    for _ in range(12):
        ks = np.arange(_SCAN_STEP, k_max, _SCAN_STEP)
        if len(ks) < 2:
            k_max *= 2.0
            continue
        brs = _brackets(f, ks)
        if brs:
            roots = [ka if ka == kb else _bisect(f, ka, kb) for ka, kb in brs]
            return float(max(roots))
        if not cls.guaranteed:
            return None
        k_max *= 2.0
    return None


def _hyper_window(pair, m, n):
    """Scan window from the continuum (tanh ~ 1, sh ~ identity) estimate
    of where n*sh^2 overtakes the other terms."""
    ncells = pair.n_cells
    if n != 0.0:
        disc = max(1.0 + 4.0 * m * n, 0.0)
        sh_star = (1.0 + math.sqrt(disc)) / (2.0 * abs(n))
    else:
        sh_star = max(abs(m), 1.0)
    k_est = ncells * math.asinh(sh_star / ncells)
    return max(20.0, 2.0 * k_est + 5.0)


def _as_pair_coefs(edge):
    """Edge condition as characteristic-equation coefficients."""
    if edge.kind == DIRICHLET:
        return 1.0, 0.0
    if edge.kind == NEUMANN:
        return 0.0, 1.0
    return edge.coef_u, edge.coef_du


def select_wavenumber(low, high, n_cells):
    """Extremal mode for one direction given its two edge conditions.

    Dirichlet/Neumann combinations use the closed table; any Robin edge
    routes through the characteristic equations, hyperbolic root first.
    """
    kinds = (low.kind, high.kind)
    if kinds == (DIRICHLET, DIRICHLET):
        return WavenumberMode.trig(math.pi)
    if DIRICHLET in kinds and NEUMANN in kinds:
        return WavenumberMode.trig(0.5 * math.pi)
    if kinds == (NEUMANN, NEUMANN):
        return WavenumberMode.zero()
    a, b = _as_pair_coefs(low)
    c, d = _as_pair_coefs(high)
    pair = RobinPair(a, b, c, d, n_cells)
    k_hyper = hyper_wavenumber(pair)
    if k_hyper is not None:
        return WavenumberMode.hyper(k_hyper)
    return WavenumberMode.trig(trig_wavenumber(pair))
