import numpy as np
import pytest

from sorpoisson import BoundarySet, EdgeCondition


def edges(left="dirichlet", right="dirichlet", bottom="dirichlet", top="dirichlet"):
    """BoundarySet from shorthand: 'dirichlet' | 'neumann' | (a, b)."""

    def mk(spec):
        if spec == "dirichlet":
            return EdgeCondition.dirichlet()
        if spec == "neumann":
            return EdgeCondition.neumann()
        return EdgeCondition.robin(*spec)

    return BoundarySet(mk(left), mk(right), mk(bottom), mk(top))


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture
def dirichlet_bcs():
    return BoundarySet.all_dirichlet()
