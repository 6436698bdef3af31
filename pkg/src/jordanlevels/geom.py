"""Planar primitives: points, segments, circular arcs, lines.

Distances are closed-form; intersections report tangential contact as a
single flagged point and collinear/cocircular overlap as an interval.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Union

TWO_PI = 2.0 * math.pi

EPS_ABS = 1e-12
EPS_REL = 1e-9


class Point(NamedTuple):
    x: float
    y: float


Point2 = Point


@dataclass(frozen=True)
class Tolerance:
    eps_abs: float = EPS_ABS
    eps_rel: float = EPS_REL

    def __post_init__(self):
        if not (self.eps_abs > 0 and self.eps_rel > 0):
            raise ValueError("tolerances must be positive")

    def effective(self, diameter: float) -> float:
        return max(self.eps_abs, self.eps_rel * diameter)


def sub(a, b):
    return Point(a[0] - b[0], a[1] - b[1])


def add(a, b):
    return Point(a[0] + b[0], a[1] + b[1])


def scale(a, k):
    return Point(a[0] * k, a[1] * k)


def dot(a, b):
    return a[0] * b[0] + a[1] * b[1]


def cross(a, b):
    return a[0] * b[1] - a[1] * b[0]


def norm(a):
    return math.hypot(a[0], a[1])


def dist(a, b):
    return math.hypot(a[0] - b[0], a[1] - b[1])


def unit(a):
    n = norm(a)
    return Point(a[0] / n, a[1] / n)


def angle_of(v):
    return math.atan2(v[1], v[0])


@dataclass(frozen=True)
class Segment:
    a: Point
    b: Point

    @property
    def start(self) -> Point:
        return self.a

    @property
    def end(self) -> Point:
        return self.b

    @property
    def length(self) -> float:
        return dist(self.a, self.b)

    def point_at(self, t: float) -> Point:
        if t == 1.0:
            return self.b
        return Point(self.a[0] + t * (self.b[0] - self.a[0]),
                     self.a[1] + t * (self.b[1] - self.a[1]))

    def tangent_at(self, t: float) -> Point:
        return unit(sub(self.b, self.a))

    def closest(self, p) -> tuple[float, float]:
        """Return ``(t, distance)`` of the closest point to ``p``."""
        dx, dy = self.b[0] - self.a[0], self.b[1] - self.a[1]
        L2 = dx * dx + dy * dy
        t = ((p[0] - self.a[0]) * dx + (p[1] - self.a[1]) * dy) / L2
        t = min(1.0, max(0.0, t))
        q = self.point_at(t)
        return t, dist(p, q)

    def sub_piece(self, t0: float, t1: float) -> "Segment":
        return Segment(self.point_at(t0), self.point_at(t1))

    def reversed(self) -> "Segment":
        return Segment(self.b, self.a)

    def bbox(self):
        return (min(self.a[0], self.b[0]), min(self.a[1], self.b[1]),
                max(self.a[0], self.b[0]), max(self.a[1], self.b[1]))

    def param_of(self, p) -> float:
        dx, dy = self.b[0] - self.a[0], self.b[1] - self.a[1]
        return ((p[0] - self.a[0]) * dx + (p[1] - self.a[1]) * dy) / (dx * dx + dy * dy)


@dataclass(frozen=True)
class CircularArc:
    """Arc of the circle ``S(center, radius)``.

    ``sweep`` is signed: positive for counter-clockwise travel. A full
    circle has ``|sweep| == 2*pi``.
    """

    center: Point
    radius: float
    start_angle: float
    sweep: float

    @classmethod
    def from_angles(cls, center, radius, start_angle, end_angle, ccw=True):
        s = end_angle - start_angle
        if ccw:
            s = math.fmod(s, TWO_PI)
            if s <= 0:
                s += TWO_PI
        else:
            s = -math.fmod(-s, TWO_PI)
            if s >= 0:
                s -= TWO_PI
        return cls(Point(*center), radius, start_angle, s)

    @classmethod
    def circle(cls, center, radius):
        return cls(Point(*center), radius, 0.0, TWO_PI)

    @property
    def end_angle(self) -> float:
        return self.start_angle + self.sweep

    @property
    def ccw(self) -> bool:
        return self.sweep > 0

    @property
    def is_full(self) -> bool:
        return abs(self.sweep) >= TWO_PI - 1e-14

    @property
    def start(self) -> Point:
        return self.point_at(0.0)

    @property
    def end(self) -> Point:
        return self.point_at(1.0)

    @property
    def length(self) -> float:
        return self.radius * abs(self.sweep)

    def point_at(self, t: float) -> Point:
        th = self.start_angle + t * self.sweep
        return Point(self.center[0] + self.radius * math.cos(th),
                     self.center[1] + self.radius * math.sin(th))

    def tangent_at(self, t: float) -> Point:
        th = self.start_angle + t * self.sweep
        s = 1.0 if self.sweep > 0 else -1.0
        return Point(-s * math.sin(th), s * math.cos(th))

    def param_of_angle(self, theta: float) -> float:
        """Parameter of direction ``theta``; values in [0, 1] lie on the arc.

        Directions off the arc map into (1, 2*pi/|sweep|).
        """
        d = theta - self.start_angle
        if self.sweep < 0:
            d = -d
        d = math.fmod(d, TWO_PI)
        if d < 0:
            d += TWO_PI
        return d / abs(self.sweep)

    def param_of(self, p) -> float:
        t = self.param_of_angle(angle_of(sub(p, self.center)))
        if t > 1.0:
            # snap near-start directions just past 2*pi back onto 0
            full = TWO_PI / abs(self.sweep)
            if full - t < 1e-12 * full:
                return 0.0
        return t

    def contains_angle(self, theta: float, slack: float = 0.0) -> bool:
        if self.is_full:
            return True
        t = self.param_of_angle(theta)
        full = TWO_PI / abs(self.sweep)
        return t <= 1.0 + slack or t >= full - slack

    def closest(self, p) -> tuple[float, float]:
        v = sub(p, self.center)
        r = norm(v)
        if r == 0.0:
            return 0.0, self.radius
        if self.is_full:
            return self.param_of_angle(angle_of(v)), abs(r - self.radius)
        t = self.param_of_angle(angle_of(v))
        if t <= 1.0:
            return t, abs(r - self.radius)
        d0 = dist(p, self.start)
        d1 = dist(p, self.end)
        return (0.0, d0) if d0 <= d1 else (1.0, d1)

    def sub_piece(self, t0: float, t1: float) -> "CircularArc":
        return CircularArc(self.center, self.radius,
                           self.start_angle + t0 * self.sweep, (t1 - t0) * self.sweep)

    def reversed(self) -> "CircularArc":
        return CircularArc(self.center, self.radius, self.end_angle, -self.sweep)

    def extremal_params(self) -> list[float]:
        """Parameters of the axis-extremal points lying on the arc."""
        out = []
        for k in range(4):
            th = k * math.pi / 2
            if self.contains_angle(th):
                t = self.param_of_angle(th)
                out.append(min(t, 1.0) if t <= 1.0 else 0.0)
        return out

    def bbox(self):
        pts = [self.start, self.end] + [self.point_at(t) for t in self.extremal_params()]
        xs = [q[0] for q in pts]
        ys = [q[1] for q in pts]
        return min(xs), min(ys), max(xs), max(ys)


@dataclass(frozen=True)
class Line:
    p: Point
    dir: Point

    def __post_init__(self):
        if abs(norm(self.dir) - 1.0) > 1e-12:
            raise ValueError("Line direction must be a unit vector")

    @classmethod
    def through(cls, a, b):
        return cls(Point(*a), unit(sub(b, a)))

    def point_at(self, t: float) -> Point:
        return Point(self.p[0] + t * self.dir[0], self.p[1] + t * self.dir[1])

    def distance(self, q) -> float:
        return abs(cross(self.dir, sub(q, self.p)))


Edge = Union[Segment, CircularArc]
Primitive = Union[Segment, CircularArc, Line]


def dist_point_primitive(p, e: Primitive) -> float:
    if isinstance(e, Line):
        return e.distance(p)
    return e.closest(p)[1]


# ---------------------------------------------------------------- orientation

LEFT, RIGHT, COLLINEAR = "left", "right", "collinear"


def orientation(a, b, c, tol: float = EPS_ABS) -> str:
    """Side of ``c`` relative to the directed line ``a -> b``.

    The collinearity band is ``tol`` measured as a distance from the line.
    """
    ab = sub(b, a)
    cr = cross(ab, sub(c, a))
    scale_ = max(norm(ab), 1e-300)
    if abs(cr) / scale_ <= tol:
        return COLLINEAR
    return LEFT if cr > 0 else RIGHT


# --------------------------------------------------------------- intersection


@dataclass(frozen=True)
class Hit:
    point: Point
    tangential: bool
    t1: float
    t2: float


@dataclass(frozen=True)
class Overlap:
    """Shared interval of two collinear segments or cocircular arcs."""

    start: Point
    end: Point
    t1: tuple[float, float]
    t2: tuple[float, float]


def _carrier(e):
    if isinstance(e, Line):
        return "line", e.p, e.dir
    if isinstance(e, Segment):
        return "line", e.a, unit(sub(e.b, e.a))
    return "circle", e.center, e.radius


def _param(e, q, tol):
    """Parameter of point ``q`` (known to lie on the carrier) or None if off ``e``."""
    if isinstance(e, Line):
        return dot(sub(q, e.p), e.dir)
    if isinstance(e, Segment):
        L = e.length
        t = e.param_of(q)
        s = tol / L
        if -s <= t <= 1.0 + s:
            return min(1.0, max(0.0, t))
        return None
    theta = angle_of(sub(q, e.center))
    if e.is_full:
        return e.param_of_angle(theta)
    t = e.param_of_angle(theta)
    s = tol / max(e.length, 1e-300)
    if t <= 1.0 + s:
        return min(t, 1.0)
    full = TWO_PI / abs(e.sweep)
    if t >= full - s:
        return 0.0
    return None


def _line_line(p1, d1, p2, d2, tol):
    den = cross(d1, d2)
    if abs(den) <= 1e-15:
        if abs(cross(d1, sub(p2, p1))) <= tol:
            return "overlap"
        return []
    t = cross(sub(p2, p1), d2) / den
    return [(Point(p1[0] + t * d1[0], p1[1] + t * d1[1]), False)]


def _line_circle(p, d, c, r, tol):
    w = sub(c, p)
    t0 = dot(w, d)
    foot = Point(p[0] + t0 * d[0], p[1] + t0 * d[1])
    h = cross(d, w)
    gap = abs(h) - r
    if gap > tol:
        return []
    if abs(gap) <= tol:
        return [(foot, True)]
    s = math.sqrt(r * r - h * h)
    return [(Point(foot[0] - s * d[0], foot[1] - s * d[1]), False),
            (Point(foot[0] + s * d[0], foot[1] + s * d[1]), False)]


def _circle_circle(c1, r1, c2, r2, tol):
    d = dist(c1, c2)
    if d <= tol and abs(r1 - r2) <= tol:
        return "overlap"
    if d <= tol:
        return []
    if d > r1 + r2 + tol or d < abs(r1 - r2) - tol:
        return []
    u = Point((c2[0] - c1[0]) / d, (c2[1] - c1[1]) / d)
    if abs(d - (r1 + r2)) <= tol:
        return [(Point(c1[0] + r1 * u[0], c1[1] + r1 * u[1]), True)]
    if abs(d - abs(r1 - r2)) <= tol:
        s = 1.0 if r1 >= r2 else -1.0
        return [(Point(c1[0] + s * r1 * u[0], c1[1] + s * r1 * u[1]), True)]
    a = (d * d + r1 * r1 - r2 * r2) / (2 * d)
    h = math.sqrt(max(r1 * r1 - a * a, 0.0))
    m = Point(c1[0] + a * u[0], c1[1] + a * u[1])
    return [(Point(m[0] - h * u[1], m[1] + h * u[0]), False),
            (Point(m[0] + h * u[1], m[1] - h * u[0]), False)]


def _overlap(e1, e2, tol):
    """Interval shared by two primitives on the same carrier."""
    ends = []
    for q in (e1.start, e1.end) if not isinstance(e1, Line) else ():
        if _param(e2, q, tol) is not None:
            ends.append(q)
    for q in (e2.start, e2.end) if not isinstance(e2, Line) else ():
        if _param(e1, q, tol) is not None:
            ends.append(q)
    if isinstance(e1, CircularArc) and e1.is_full and isinstance(e2, CircularArc) and e2.is_full:
        ends = [e1.start]
    uniq = []
    for q in ends:
        if all(dist(q, u) > tol for u in uniq):
            uniq.append(q)
    if not uniq:
        return []
    if len(uniq) == 1:
        q = uniq[0]
        if isinstance(e1, CircularArc) and e1.is_full and isinstance(e2, CircularArc) and e2.is_full:
            return [Overlap(q, q, (0.0, 1.0), (0.0, 1.0))]
        return [Hit(q, True, _param(e1, q, tol), _param(e2, q, tol))]
    if len(uniq) > 2:
        # partial arcs covering the whole circle between them; keep extreme pair
        uniq = uniq[:2]
    a, b = uniq
    t1 = (_param(e1, a, tol), _param(e1, b, tol))
    t2 = (_param(e2, a, tol), _param(e2, b, tol))
    if isinstance(e1, CircularArc) and _param(e2, e1.point_at(0.5 * (t1[0] + t1[1])), tol) is None:
        # complementary arcs meeting only at their ends
        return [Hit(a, False, t1[0], t2[0]), Hit(b, False, t1[1], t2[1])]
    return [Overlap(a, b, t1, t2)]


def intersect(e1: Primitive, e2: Primitive, tol: float = 1e-9) -> list:
    """All contacts between two primitives.

    Returns a list of :class:`Hit` (tangential contacts flagged) or, for
    collinear segments / cocircular arcs sharing an interval, :class:`Overlap`.
    """
    k1, k2 = _carrier(e1), _carrier(e2)
    if k1[0] == "line" and k2[0] == "line":
        raw = _line_line(k1[1], k1[2], k2[1], k2[2], tol)
    elif k1[0] == "line":
        raw = _line_circle(k1[1], k1[2], k2[1], k2[2], tol)
    elif k2[0] == "line":
        raw = _line_circle(k2[1], k2[2], k1[1], k1[2], tol)
    else:
        raw = _circle_circle(k1[1], k1[2], k2[1], k2[2], tol)
    if raw == "overlap":
        return _overlap(e1, e2, tol)
    out = []
    for q, tangential in raw:
        t1 = _param(e1, q, tol)
        if t1 is None:
            continue
        t2 = _param(e2, q, tol)
        if t2 is None:
            continue
        out.append(Hit(q, tangential, t1, t2))
    return out


def edge_bbox(e: Edge):
    return e.bbox()
