import math

import numpy as np
import pytest

from jordanlevels.distance import (GridTooLarge, grid_sample, nearest_points, signed_distance,
                                   signed_distances, unsigned_distance)
from jordanlevels.generators import circle_curve, regular_ngon


def test_circle_signed_distance():
    c = circle_curve(1.0)
    assert signed_distance(c, (0, 0)) == pytest.approx(1)
    assert signed_distance(c, (3, 0)) == pytest.approx(-2)
    assert signed_distance(c, (1, 0)) == 0.0


def test_vectorised_matches_scalar():
    c = regular_ngon(6)
    rng = np.random.default_rng(3)
    px, py = rng.uniform(-1, 2.5, 50), rng.uniform(-0.5, 2.5, 50)
    d = signed_distances(c, px, py)
    for k in range(50):
        assert d[k] == pytest.approx(signed_distance(c, (px[k], py[k])), abs=1e-14)
        assert abs(d[k]) == pytest.approx(unsigned_distance(c, (px[k], py[k])), abs=1e-14)


def test_nearest_points_centre_of_square():
    c = regular_ngon(4)
    x0, y0, x1, y1 = c.bbox
    ns = nearest_points(c, ((x0 + x1) / 2, (y0 + y1) / 2))
    assert len(ns.points) == 4
    assert ns.angular_span() == pytest.approx(1.5 * math.pi)


def test_nearest_points_single():
    c = regular_ngon(4)
    x0, y0, _, _ = c.bbox
    ns = nearest_points(c, (x0 + 0.5, y0 + 0.1))
    assert len(ns.points) == 1 and ns.distance == pytest.approx(0.1)


def test_grid_sample_and_cap():
    c = circle_curve(1.0)
    g = grid_sample(c, (-1.5, -1.5, 1.5, 1.5), 0.1)
    assert g.values.shape == (g.ny, g.nx)
    assert g.values.max() == pytest.approx(1, abs=0.1)
    with pytest.raises(GridTooLarge):
        grid_sample(c, (-1.5, -1.5, 1.5, 1.5), 1e-5, cap=10_000)
