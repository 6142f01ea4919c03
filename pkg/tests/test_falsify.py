import math

import numpy as np
import pytest

from anglekit.errors import BadParameter
from anglekit.search.falsify import (
    PENTAGON4,
    RHOMBUS,
    family_distances,
    falsify_quad_lemma,
    quad_angle_jacobian,
    quad_angles,
    run_trial,
)


def test_jacobian_matches_finite_differences():
    rng = np.random.default_rng(3)
    xy = rng.normal(size=(4, 2))
    jac = quad_angle_jacobian(xy)
    h = 1e-7
    for p in range(4):
        for c in range(2):
            d = np.zeros_like(xy)
            d[p, c] = h
            fd = (quad_angles(xy + d) - quad_angles(xy - d)) / (2 * h)
            assert np.allclose(jac[:, p, c], fd, atol=1e-5)


def test_family_shapes_are_at_distance_zero():
    assert family_distances(RHOMBUS)["twin-equilateral"] < 1e-12
    assert family_distances(PENTAGON4)["pentagon-minus-vertex"] < 1e-12
    rect = np.array([[0, 0], [3, 0], [3, 1], [0, 1]], dtype=float)
    assert family_distances(rect)["rectangle"] < 1e-9


def test_rectangle_start_stays_rectangle():
    rect = np.array([[0, 0], [2, 0], [2, 1], [0, 1]], dtype=float)
    out, info = run_trial(np.random.default_rng(0), 1e-6, start=rect)
    assert out == "rectangle" and info is None


def test_seeded_and_reproducible():
    a = falsify_quad_lemma(40, seed=7)
    b = falsify_quad_lemma(40, seed=7)
    assert a == b
    assert a.ok
    assert sum(a.families.values()) + a.stuck + a.degenerate + a.nonconvex == a.trials


def test_angles_sum_per_triangle():
    xy = np.array([[0, 0], [1, 0], [0.3, 0.8], [1.2, 1.1]])
    ang = quad_angles(xy)
    assert ang.shape == (12,)
    assert math.isclose(ang.sum(), 4 * math.pi)


def test_bad_trials():
    with pytest.raises(BadParameter):
        falsify_quad_lemma(0, seed=1)
