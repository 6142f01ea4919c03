import numpy as np
import pytest

from anglekit import _fallback, kernels
from anglekit.search.universe import cyclic_universe, grid_universe

_speedups = pytest.importorskip("anglekit._speedups")


def test_backend_selected():
    assert kernels.BACKEND == "cython"


@pytest.mark.parametrize("universe", [cyclic_universe(9), cyclic_universe(10, False), grid_universe(4)], ids=lambda u: u.name)
@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("include_zero", [False, True])
def test_subset_dfs_equivalent(universe, k, include_zero):
    table, values = universe.angle_table()
    for first in range(len(universe) - 2):
        a = _fallback.subset_dfs(table, len(values), first, k, include_zero)
        b = _speedups.subset_dfs(table, len(values), first, k, include_zero)
        assert a[0] == b[0] and sorted(a[1]) == sorted(b[1]) and a[2] == b[2]


def test_grid_cost_equivalent():
    rng = np.random.default_rng(1)
    base = np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]])
    angles = np.array([np.pi / 4, np.pi / 2])
    cand = rng.uniform(-2, 2, size=(500, 2))
    a = _fallback.grid_cost(cand, base, angles, 2)
    b = _speedups.grid_cost(cand, base, angles, 2)
    assert np.allclose(a, b, atol=1e-12)
