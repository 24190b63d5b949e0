import numpy as np
import pytest

from sorpoisson import (
    CENTRAL2,
    EdgeCondition,
    initial_guess,
    l2_norm,
    make_grid,
    point_sor_sweep,
)
from sorpoisson.grid import DIRICHLET, NEUMANN, ROBIN, unknown_box

from conftest import edges


class TestMakeGrid:
    def test_paper_grids(self):
        assert make_grid(10, 30).beta == pytest.approx(3.0)
        assert make_grid(30, 10).beta == pytest.approx(1.0 / 3.0)

    def test_square(self):
        g = make_grid(10, 10)
        assert g.beta == 1.0
        assert g.dx == 0.1 and g.dy == 0.1

    def test_spacings_exact(self):
        for n in (3, 4, 7, 16, 31):
            g = make_grid(n, n)
            assert g.dx * g.nx == 1.0
            assert g.dy * g.ny == 1.0
            assert g.beta == 1.0

    def test_too_small(self):
        with pytest.raises(ValueError):
            make_grid(2, 10)
        with pytest.raises(ValueError):
            make_grid(10, 2)


class TestEdgeCondition:
    def test_robin_normalization(self):
        assert EdgeCondition.robin(1.0, 0.0).kind == DIRICHLET
        assert EdgeCondition.robin(0.0, 2.0).kind == NEUMANN
        assert EdgeCondition.robin(1.0, -0.25).kind == ROBIN

    def test_robin_both_zero(self):
        with pytest.raises(ValueError):
            EdgeCondition.robin(0.0, 0.0)

    def test_all_neumann_flag(self):
        assert not edges("neumann", "neumann", "neumann", "neumann").solvable
        assert edges("neumann", "neumann", "neumann").solvable


class TestInitialGuess:
    def test_all_dirichlet_10x10(self, dirichlet_bcs):
        g = make_grid(10, 10)
        fld = initial_guess(g, dirichlet_bcs)
        assert np.all(fld.values[1:-1, 1:-1] == 1.0)
        assert np.all(fld.values[0, :] == 0.0)
        assert np.all(fld.values[-1, :] == 0.0)
        assert np.all(fld.values[:, 0] == 0.0)
        assert np.all(fld.values[:, -1] == 0.0)

    def test_4x4_counts_nine_ones(self, dirichlet_bcs):
        fld = initial_guess(make_grid(4, 4), dirichlet_bcs)
        assert int(np.sum(fld.values == 1.0)) == 9

    def test_neumann_right_extends_unknowns(self):
        g = make_grid(4, 4)
        bcs = edges(right="neumann")
        fld = initial_guess(g, bcs)
        # right-edge column joins the unknown set except the corners,
        # which stay fixed where they meet Dirichlet edges
        assert unknown_box(g, bcs) == (1, 4, 1, 3)
        assert np.all(fld.values[1:4, 4] == 1.0)
        assert fld.values[0, 4] == 0.0 and fld.values[4, 4] == 0.0
        assert int(np.sum(fld.values == 1.0)) == 12


class TestL2Norm:
    def test_zero(self):
        g = make_grid(4, 4)
        assert l2_norm(np.zeros(g.shape)) == 0.0

    def test_single_entry(self):
        g = make_grid(4, 4)
        v = np.zeros(g.shape)
        v[2, 1] = 3.0
        assert l2_norm(v) == 3.0

    def test_interior_ones_4x4(self, dirichlet_bcs):
        fld = initial_guess(make_grid(4, 4), dirichlet_bcs)
        assert l2_norm(fld) == pytest.approx(3.0)

    def test_nonnegative_and_definite(self, rng):
        g = make_grid(5, 7)
        for _ in range(20):
            v = rng.standard_normal(g.shape)
            assert l2_norm(v) >= 0.0
            assert (l2_norm(v) == 0.0) == bool(np.all(v == 0.0))


class TestFixedEntriesInvariant:
    def test_dirichlet_bits_untouched_by_sweeps(self, rng):
        g = make_grid(6, 5)
        for bcs in (edges(), edges(right="neumann"), edges(left=(1.0, 1.0), top="neumann")):
            fld = initial_guess(g, bcs)
            fld.values[~fld.fixed] = rng.standard_normal(int((~fld.fixed).sum()))
            before = fld.values.copy()
            for omega in (0.8, 1.0, 1.7):
                point_sor_sweep(fld, g, bcs, CENTRAL2, omega)
            after = fld.values
            assert np.array_equal(before[fld.fixed], after[fld.fixed])
