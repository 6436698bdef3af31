import math

import pytest

from jordanlevels.geom import (COLLINEAR, LEFT, RIGHT, CircularArc, Hit, Overlap, Point, Segment, Tolerance,
                               dist_point_primitive, intersect, orientation)


def test_segment_basics():
    s = Segment(Point(0, 0), Point(3, 4))
    assert s.length == 5
    assert s.point_at(0.5) == (1.5, 2.0)
    t, d = s.closest((3, 0))
    assert t == pytest.approx(9 / 25) and d == pytest.approx(2.4)
    assert s.reversed().start == (3, 4)


def test_arc_length_and_points():
    a = CircularArc(Point(0, 0), 2.0, 0.0, math.pi / 2)
    assert a.length == pytest.approx(math.pi)
    assert a.start == pytest.approx((2, 0))
    assert a.end == pytest.approx((0, 2), abs=1e-15)
    t, d = a.closest((3, 3))
    assert t == pytest.approx(0.5) and d == pytest.approx(3 * math.sqrt(2) - 2)
    # closest point off the angular range snaps to an endpoint
    t, d = a.closest((-1, -1))
    assert t in (0.0, 1.0)


def test_arc_from_angles_direction():
    a = CircularArc.from_angles(Point(0, 0), 1.0, 0.0, math.pi / 2, ccw=False)
    assert a.sweep == pytest.approx(-1.5 * math.pi)


def test_orientation():
    assert orientation((0, 0), (1, 0), (0, 1)) == LEFT
    assert orientation((0, 0), (1, 0), (0, -1)) == RIGHT
    assert orientation((0, 0), (1, 0), (5, 1e-13)) == COLLINEAR


def test_segment_crossing():
    hits = intersect(Segment(Point(0, 0), Point(2, 2)), Segment(Point(0, 2), Point(2, 0)))
    assert len(hits) == 1 and isinstance(hits[0], Hit)
    assert hits[0].point == pytest.approx((1, 1))


def test_segment_overlap():
    out = intersect(Segment(Point(0, 0), Point(2, 0)), Segment(Point(1, 0), Point(3, 0)))
    assert len(out) == 1 and isinstance(out[0], Overlap)


def test_line_arc_tangent():
    a = CircularArc(Point(0, 0), 1.0, 0.0, math.pi)
    hits = intersect(Segment(Point(-2, 1), Point(2, 1)), a)
    assert len(hits) == 1 and hits[0].tangential
    assert hits[0].point == pytest.approx((0, 1))


def test_arc_arc_two_points():
    a = CircularArc(Point(0, 0), 1.0, -math.pi, 2 * math.pi - 1e-9)
    b = CircularArc(Point(1, 0), 1.0, -math.pi, 2 * math.pi - 1e-9)
    pts = sorted(h.point for h in intersect(a, b))
    assert len(pts) == 2
    assert pts[0] == pytest.approx((0.5, -math.sqrt(3) / 2))


def test_distance_to_primitive():
    assert dist_point_primitive((0, 5), Segment(Point(-1, 0), Point(1, 0))) == pytest.approx(5)
    assert dist_point_primitive((0, 0), CircularArc(Point(0, 0), 2.0, 0, 1.0)) == pytest.approx(2)


def test_tolerance_effective():
    t = Tolerance()
    assert t.effective(1e6) == pytest.approx(1e-3)
    assert t.effective(1e-6) == 1e-12
    with pytest.raises(ValueError):
        Tolerance(0.0, 1e-9)


def test_complementary_arcs_touch_only_at_ends():
    a = CircularArc(Point(0, 0), 1.0, 0.0, math.pi)
    b = CircularArc(Point(0, 0), 1.0, math.pi, math.pi)
    out = intersect(a, b)
    assert len(out) == 2 and all(isinstance(h, Hit) for h in out)
    c = CircularArc(Point(0, 0), 1.0, 0.5, 1.0)
    assert isinstance(intersect(a, c)[0], Overlap)
