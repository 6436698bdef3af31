import math

import numpy as np
import pytest

from jordanlevels.distance import ScalarGrid, signed_distance
from jordanlevels.generators import circle_curve, dumbbell, polygon, regular_ngon, staircase_sharpljc
from jordanlevels.geom import Point
from jordanlevels.levelset import (EMPTY, JORDAN, MULTIPLE, NON_MANIFOLD, classify_components,
                                   eps_boundary_of_set, exact_vs_grid_hausdorff, hausdorff, level_set_exact,
                                   level_set_grid, marching_squares)
from jordanlevels.curve import Subarc


def on_level(curve, res, tol=1e-9):
    for ch in res.chains:
        for p in ch.sample(curve.diameter / 200):
            assert signed_distance(curve, p) == pytest.approx(res.epsilon, abs=tol)


def test_circle_levels():
    c = circle_curve(1.0)
    r = level_set_exact(c, 0.3)
    assert r.classification == JORDAN and r.length == pytest.approx(2 * math.pi * 0.7)
    r = level_set_exact(c, -0.5)
    assert r.length == pytest.approx(3 * math.pi)
    on_level(c, r)


def test_circle_centre_is_isolated_point():
    r = level_set_exact(circle_curve(1.0), 1.0)
    assert r.isolated_points == [(0.0, 0.0)]
    assert r.classification == MULTIPLE and not r.chains


def test_empty_beyond_inradius():
    assert level_set_exact(circle_curve(1.0), 1.5).classification == EMPTY


def test_square_offsets_are_rounded_or_shrunk():
    sq = polygon([(0, 0), (1, 0), (1, 1), (0, 1)])
    out = level_set_exact(sq, -0.25)
    kinds = out.chains[0].kinds()
    assert kinds.count("A") == 4 and kinds.count("S") == 4
    inner = level_set_exact(sq, 0.25)
    assert inner.chains[0].kinds() == ["S"] * 4
    on_level(sq, out)
    on_level(sq, inner)


def test_dumbbell_splits():
    d = dumbbell(0.2)
    assert level_set_exact(d, 0.05).classification == JORDAN
    mid = level_set_exact(d, 0.1)
    assert mid.classification == NON_MANIFOLD
    assert sorted(mid.branch_points) == [(1.0, 0.5), (2.0, 0.5)]
    late = level_set_exact(d, 0.15)
    assert late.classification == MULTIPLE and late.count == 2


def test_staircase_branch_point():
    c = staircase_sharpljc(6)
    r = level_set_exact(c, 2.0 ** -5)
    assert r.classification == NON_MANIFOLD
    assert r.branch_points[0] == pytest.approx((0.25 - 2.0 ** -5, 0.0), abs=1e-12)


def test_zero_level_rejected():
    with pytest.raises(ValueError):
        level_set_exact(regular_ngon(4), 0.0)


def test_classify_components_matches_exact():
    d = dumbbell(0.2)
    for eps, n in ((0.05, 1), (0.15, 2), (-0.1, 1)):
        comp = classify_components(d, eps)
        assert comp.count == n and comp.consistent


def test_marching_squares_on_radial_field():
    xs = np.arange(-10, 11) * 0.1
    X, Y = np.meshgrid(xs, xs)
    g = ScalarGrid(Point(-1.0, -1.0), 0.1, 21, 21, 0.9 - np.hypot(X, Y))
    lines = marching_squares(g, 0.4)
    assert len(lines) == 1 and lines[0][1]
    r = np.hypot(*np.asarray(lines[0][0]).T)
    assert np.all(np.abs(r - 0.5) < 0.01)


def test_grid_oracle_close_to_exact():
    c = regular_ngon(5)
    eps = -0.2
    h = abs(eps) / 16
    d = exact_vs_grid_hausdorff(level_set_exact(c, eps), level_set_grid(c, eps, h), h)
    assert d <= 2 * h


def test_grid_requires_fine_step():
    with pytest.raises(ValueError):
        level_set_grid(regular_ngon(4), 0.1, 0.1)


def test_hausdorff_of_shifted_clouds():
    A = np.array([[0.0, 0.0], [1.0, 0.0]])
    assert hausdorff(A, A + [0, 0.5]) == pytest.approx(0.5)


def test_eps_boundary_of_segment_is_stadium():
    c = polygon([(0, 0), (1, 0), (1, 1), (0, 1)])
    lam = Subarc(c, c.at_s(0.0), c.at_s(1.0))
    eb = eps_boundary_of_set(lam, 0.5)
    assert eb.classification == JORDAN
    assert eb.length == pytest.approx(2 + math.pi)
