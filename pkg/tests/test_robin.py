import math

import numpy as np
import pytest

from sorpoisson import EdgeCondition, select_wavenumber
from sorpoisson.errors import NoRootError
from sorpoisson.robin import (
    HYPER,
    ROOTS_AT_MOST_ONE,
    ROOTS_AT_MOST_TWO,
    ROOTS_ONE,
    ROOTS_ZERO,
    TRIG,
    ZERO,
    RobinPair,
    WavenumberMode,
    classify,
    hyper_char,
    hyper_wavenumber,
    trig_char,
    trig_wavenumber,
)

# published coefficient rows: (a, b, c, d) -> k at n_cells = 30
TABLE_ROWS = {
    "BC1": ((1.0, -0.25, 1.0, 1.0), 1.70073, TRIG),
    "BC2": ((1.0, 2.0, 1.0, 2.0), 0.49998, HYPER),
    "BC3": ((1.0, 1.0, 1.0, -1.0), 1.54300, HYPER),
}


class TestClassify:
    def test_table_cells(self):
        assert classify(0.8, -0.2).max_positive_roots == ROOTS_ZERO
        assert classify(-0.5, 0.5).max_positive_roots == ROOTS_ONE
        assert classify(-2.0, 0.1).max_positive_roots == ROOTS_AT_MOST_TWO
        assert classify(-1.0, 0.2).max_positive_roots == ROOTS_AT_MOST_ONE
        assert classify(-1.0, -2.0).max_positive_roots == ROOTS_ZERO
        assert classify(-3.0, -1.0).max_positive_roots == ROOTS_ONE
        assert classify(2.0, 3.0).max_positive_roots == ROOTS_ONE

    def test_inadmissible(self):
        with pytest.raises(ValueError):
            classify(-2.0, 1.0)  # 1 + 4mn = -7


class TestTableRoots:
    @pytest.mark.parametrize("label", list(TABLE_ROWS))
    def test_published_values_at_30_cells(self, label):
        (a, b, c, d), k_ref, eq = TABLE_ROWS[label]
        pair = RobinPair(a, b, c, d, 30)
        k_hyper = hyper_wavenumber(pair)
        if eq == HYPER:
            assert k_hyper == pytest.approx(k_ref, abs=1e-3)
        else:
            assert k_hyper is None
            assert trig_wavenumber(pair) == pytest.approx(k_ref, abs=1e-3)

    def test_published_values_do_not_match_10_cells(self):
        # the table was computed on the finer grid: at n_cells = 10 both
        # BC1 and BC3 drift past the 1e-3 band
        (a, b, c, d), k_ref, _ = TABLE_ROWS["BC1"]
        assert abs(trig_wavenumber(RobinPair(a, b, c, d, 10)) - k_ref) > 1e-3
        (a, b, c, d), k_ref, _ = TABLE_ROWS["BC3"]
        assert abs(hyper_wavenumber(RobinPair(a, b, c, d, 10)) - k_ref) > 1e-3

    def test_bc2_closed_form(self):
        # ad - bc = 0: root is N asinh(|a/b| / N)
        for n_cells in (10, 30):
            pair = RobinPair(1.0, 2.0, 1.0, 2.0, n_cells)
            assert hyper_wavenumber(pair) == pytest.approx(
                n_cells * math.asinh(0.5 / n_cells), rel=1e-12
            )

    def test_dirichlet_neumann_encoding_reduces_to_half_pi(self):
        # left Dirichlet (1, 0), right Neumann (0, 1): cos k = 0
        pair = RobinPair(1.0, 0.0, 0.0, 1.0, 30)
        assert trig_wavenumber(pair) == pytest.approx(math.pi / 2, abs=1e-11)


class TestCharacteristicFunctions:
    def test_odd_in_k(self, rng):
        pair = RobinPair(1.0, -0.25, 1.0, 1.0, 10)
        hpair = RobinPair(1.0, 1.0, 1.0, -1.0, 10)
        for k in rng.uniform(0.01, 20.0, size=50):
            assert trig_char(pair, -k) == pytest.approx(-trig_char(pair, k), rel=1e-13, abs=1e-300)
            assert hyper_char(hpair, -k) == pytest.approx(
                -hyper_char(hpair, k), rel=1e-13, abs=1e-300
            )

    def test_root_residuals(self):
        for (a, b, c, d), _, eq in TABLE_ROWS.values():
            for n_cells in (10, 30):
                pair = RobinPair(a, b, c, d, n_cells)
                if eq == HYPER:
                    k = hyper_wavenumber(pair)
                    s = pair.n_cells * math.sinh(k / pair.n_cells)
                    scale = abs(a * c) + s * s * abs(b * d) + abs(pair.det) * s + 1.0
                    # residual of the unnormalized equation
                    res = (a * c - s * s * b * d) * math.sinh(k) + pair.det * s * math.cosh(k)
                    assert abs(res) / (scale * math.cosh(k)) < 1e-9
                else:
                    k = trig_wavenumber(pair)
                    s = pair.n_cells * math.sin(k / pair.n_cells)
                    scale = abs(a * c) + s * s * abs(b * d) + abs(pair.det) * s + 1.0
                    assert abs(trig_char(pair, k)) / scale < 1e-9

    def test_continuum_limit_of_trig_roots(self):
        # s(k) -> k as n_cells grows, so roots approach the continuum
        # equation (ac + k^2 bd) sin k + (ad - bc) k cos k = 0
        a, b, c, d = 1.0, -0.25, 1.0, 1.0

        def continuum(k):
            return (a * c + k * k * b * d) * math.sin(k) + (a * d - b * c) * k * math.cos(k)

        lo, hi = 1.2, 2.2
        assert continuum(lo) * continuum(hi) < 0
        for _ in range(80):
            mid = 0.5 * (lo + hi)
            if continuum(lo) * continuum(mid) <= 0:
                hi = mid
            else:
                lo = mid
        k_cont = 0.5 * (lo + hi)
        errors = [
            abs(trig_wavenumber(RobinPair(a, b, c, d, n)) - k_cont) for n in (10, 30, 100, 1000)
        ]
        assert all(e2 < e1 for e1, e2 in zip(errors, errors[1:]))
        assert errors[-1] < 1e-5


def synthesize_pair(m, n, n_cells=12):
    """Coefficients (1, b, c, d) realizing (m, n) with ad - bc = 1."""
    if m == 0.0:
        b, c, d = n, 0.0, 1.0
    else:
        disc = 1.0 + 4.0 * m * n
        b = (-1.0 + math.sqrt(disc)) / (2.0 * m)
        c = m
        d = 1.0 + b * m
    pair = RobinPair(1.0, b, c, d, n_cells)
    det = pair.det
    assert det == pytest.approx(1.0, rel=1e-9)
    assert pair.a * pair.c / det == pytest.approx(m, rel=1e-9, abs=1e-12)
    assert pair.b * pair.d / det == pytest.approx(n, rel=1e-9, abs=1e-12)
    return pair


def count_sign_changes(pair, k_max, samples=4000):
    ks = np.linspace(1e-9, k_max, samples)
    vals = hyper_char(pair, ks)
    signs = np.sign(vals)
    signs = signs[signs != 0]
    return int(np.sum(signs[:-1] != signs[1:]))


class TestRootCountBounds:
    """Hyperbolic-equation root counts stay within the classification
    table over randomly sampled admissible (m, n) in every cell."""

    CELLS = {
        "n>0, m+1>0": (ROOTS_ONE, lambda r: (r.uniform(-0.999, 4.0), r.uniform(0.001, 4.0))),
        "n>0, m+1=0": (ROOTS_AT_MOST_ONE, lambda r: (-1.0, r.uniform(0.001, 0.25))),
        "n>0, m+1<0": (
            ROOTS_AT_MOST_TWO,
            lambda r: ((m := r.uniform(-6.0, -1.001)), r.uniform(0.001, -1.0 / (4.0 * m))),
        ),
        "n<=0, m+1<0": (ROOTS_ONE, lambda r: (r.uniform(-6.0, -1.001), r.uniform(-4.0, 0.0))),
        "n<=0, m+1>=0": (ROOTS_ZERO, lambda r: (r.uniform(-1.0, 4.0), r.uniform(-4.0, 0.0))),
    }

    @pytest.mark.parametrize("cell", list(CELLS))
    def test_bound_holds_over_random_pairs(self, cell, rng):
        expected_kind, sample = self.CELLS[cell]
        checked = 0
        while checked < 1000:
            m, n = sample(rng)
            if 1.0 + 4.0 * m * n < 0.0:
                continue
            cls = classify(m, n)
            assert cls.max_positive_roots == expected_kind
            pair = synthesize_pair(m, n)
            k_found = hyper_wavenumber(pair)
            k_max = 30.0 if k_found is None else max(30.0, 2.0 * k_found)
            assert count_sign_changes(pair, k_max) <= cls.bound, (m, n)
            if cls.max_positive_roots == ROOTS_ONE:
                assert k_found is not None, (m, n)
            checked += 1


class TestSelectWavenumber:
    def test_closed_cases(self):
        d, n = EdgeCondition.dirichlet, EdgeCondition.neumann
        assert select_wavenumber(d(), d(), 10) == WavenumberMode.trig(math.pi)
        assert select_wavenumber(d(), n(), 10) == WavenumberMode.trig(math.pi / 2)
        assert select_wavenumber(n(), d(), 10) == WavenumberMode.trig(math.pi / 2)
        assert select_wavenumber(n(), n(), 10) == WavenumberMode.zero()

    def test_robin_pair_prefers_hyperbolic_root(self):
        mode = select_wavenumber(EdgeCondition.robin(1, 1), EdgeCondition.robin(1, -1), 30)
        assert mode.kind == HYPER
        assert mode.k == pytest.approx(1.54300, abs=1e-3)

    def test_robin_falls_back_to_trig(self):
        mode = select_wavenumber(EdgeCondition.robin(1, -0.25), EdgeCondition.robin(1, 1), 30)
        assert mode.kind == TRIG
        assert mode.k == pytest.approx(1.70073, abs=1e-3)

    def test_robin_with_dirichlet_partner(self):
        mode = select_wavenumber(EdgeCondition.dirichlet(), EdgeCondition.robin(1, 1), 30)
        # continuum behavior: root of tan k = -k between pi/2 and pi
        assert mode.kind == TRIG
        assert math.pi / 2 < mode.k < math.pi

    def test_mode_factors(self):
        assert WavenumberMode.trig(math.pi).factor(0.1) == pytest.approx(math.cos(0.1 * math.pi))
        assert WavenumberMode.hyper(1.5).factor(0.1) == pytest.approx(math.cosh(0.15))
        assert WavenumberMode.zero().factor(0.1) == 1.0
        assert WavenumberMode.hyper(2.0).k_squared_signed() == -4.0
        assert WavenumberMode.trig(2.0).k_squared_signed() == 4.0


class TestRobinPairValidation:
    def test_rejects_empty_edge(self):
        with pytest.raises(ValueError):
            RobinPair(0.0, 0.0, 1.0, 1.0, 10)

    def test_rejects_double_dirichlet(self):
        with pytest.raises(ValueError):
            RobinPair(1.0, 0.0, 1.0, 0.0, 10)

    def test_det_zero_needs_all_nonzero(self):
        with pytest.raises(ValueError):
            hyper_wavenumber(RobinPair(0.0, 1.0, 0.0, 2.0, 10))
