"""Exact constructions of the test curves."""
from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .curve import CurveError, JordanCurve
from .geom import CircularArc, Point, Segment

MAX_SNOWFLAKE_EDGES = 1_000_000
CHOICE_RULES = ("all_flat", "all_bump", "alternating", "seeded")


def polygon(vertices) -> JordanCurve:
    vs = [Point(float(x), float(y)) for x, y in vertices]
    return JordanCurve([Segment(a, b) for a, b in zip(vs, vs[1:] + vs[:1])])


def _ngon_vertices(N: int, side: float):
    out = [Point(0.0, 0.0)]
    for k in range(N - 1):
        a = 2 * math.pi * k / N
        p = out[-1]
        out.append(Point(p[0] + side * math.cos(a), p[1] + side * math.sin(a)))
    return out


def regular_ngon(N: int, side: float = 1.0) -> JordanCurve:
    """Counter-clockwise regular polygon; first vertex at the origin, first edge along +x."""
    if N < 3 or not side > 0:
        raise ValueError("need N >= 3 and side > 0")
    return polygon(_ngon_vertices(N, side))


def circle_curve(r: float = 1.0, center=(0.0, 0.0)) -> JordanCurve:
    if not r > 0:
        raise ValueError("r must be positive")
    c = Point(float(center[0]), float(center[1]))
    return JordanCurve([CircularArc(c, r, 0.0, math.pi), CircularArc(c, r, math.pi, math.pi)])


def staircase_tooth(n: int):
    """Feet ``x_n, y_n`` and height of tooth ``n``; all values are dyadic."""
    w = 2.0 ** (-n - 2)
    right = 2.0 ** (-n)
    h = w * (0.5 + 2.0 ** (-n))
    return Point(right - w, 0.0), Point(right, 0.0), h


def staircase_sharpljc(n_teeth: int) -> JordanCurve:
    """Boundary of ``[-1,2]x[-3,0]`` with teeth ``n = 0..n_teeth-1`` on the top side."""
    if not 1 <= n_teeth <= 20:
        raise ValueError("n_teeth must be in 1..20")
    vs = [(-1.0, -3.0), (2.0, -3.0), (2.0, 0.0)]
    for n in range(n_teeth):
        x, y, h = staircase_tooth(n)
        vs += [(y[0], 0.0), (y[0], h), (x[0], h), (x[0], 0.0)]
    vs.append((-1.0, 0.0))
    return polygon(vs)


def sharplqc_params(n: int):
    """``(center, radius, alpha)`` of the arc ``sigma_n``."""
    eps = 4.0 ** (-n - 2)
    alpha = (math.pi / 12) * 2.0 ** (1 - n)
    return Point(2.0 ** (-n), -eps * math.sin(alpha)), eps, alpha


def sharplqc_curve(N: int = 24, n_max: int = 4) -> JordanCurve:
    """Regular ``N``-gon below ``[-1, 1]`` whose top edge carries the arcs ``sigma_n``."""
    if N < 12 or not 1 <= n_max <= 10:
        raise ValueError("need N >= 12 and 1 <= n_max <= 10")
    vs = _ngon_vertices(N, 2.0)
    vs = [Point(1.0 - v[0], -v[1]) for v in vs]
    top = []
    x = 1.0
    for n in range(1, n_max + 1):
        c, r, a = sharplqc_params(n)
        right = c[0] + r * math.cos(a)
        left = c[0] - r * math.cos(a)
        if right >= x:
            raise CurveError("construction", f"arc sigma_{n} overlaps its neighbour", n)
        top.append(Segment(Point(x, 0.0), Point(right, 0.0)))
        top.append(CircularArc(c, r, a, math.pi - 2 * a))
        x = left
    top.append(Segment(Point(x, 0.0), Point(-1.0, 0.0)))
    rest = [Segment(a, b) for a, b in zip(vs[1:], vs[2:] + vs[:1])]
    return JordanCurve(top + rest)


@dataclass(frozen=True)
class SnowflakeSpec:
    N: int = 6
    p: float = 0.26
    depth: int = 3
    choice_rule: str = "all_bump"
    seed: int = 0

    def __post_init__(self):
        if self.N < 3:
            raise ValueError("N must be >= 3")
        if not 0.25 <= self.p < 0.5:
            raise ValueError("p must lie in [1/4, 1/2)")
        if self.depth < 0:
            raise ValueError("depth must be >= 0")
        if self.choice_rule not in CHOICE_RULES:
            raise ValueError(f"unknown choice rule {self.choice_rule!r}")
        if self.N * 4 ** self.depth > MAX_SNOWFLAKE_EDGES:
            raise ValueError("edge count exceeds cap")


def _substitute(vs, p, bumps):
    h = math.sqrt(max(p - 0.25, 0.0))
    out = []
    n = len(vs)
    for k in range(n):
        a, b = vs[k], vs[(k + 1) % n]
        ux, uy = b[0] - a[0], b[1] - a[1]
        nx, ny = uy, -ux  # outward for a counter-clockwise polygon
        if bumps[k]:
            local = ((0.0, 0.0), (p, 0.0), (0.5, h), (1 - p, 0.0))
        else:
            local = ((0.0, 0.0), (0.25, 0.0), (0.5, 0.0), (0.75, 0.0))
        for s, t in local:
            out.append(Point(a[0] + s * ux + t * nx, a[1] + s * uy + t * ny))
    return out


def rohde_snowflake(spec: SnowflakeSpec) -> JordanCurve:
    """Edge-substitution polygon over a unit-side ``N``-gon; bumps point outward."""
    vs = _ngon_vertices(spec.N, 1.0)
    rng = random.Random(spec.seed)
    for _ in range(spec.depth):
        m = len(vs)
        if spec.choice_rule == "all_flat":
            bumps = [False] * m
        elif spec.choice_rule == "all_bump":
            bumps = [True] * m
        elif spec.choice_rule == "alternating":
            bumps = [k % 2 == 0 for k in range(m)]
        else:
            bumps = [rng.random() < 0.5 for _ in range(m)]
        vs = _substitute(vs, spec.p, bumps)
    return polygon(vs)


def dumbbell(neck_width: float = 0.2) -> JordanCurve:
    """Unit squares ``[0,1]^2`` and ``[2,3]x[0,1]`` joined by a horizontal neck."""
    if not 0 < neck_width < 1:
        raise ValueError("neck_width must lie in (0, 1)")
    lo, hi = 0.5 - neck_width / 2, 0.5 + neck_width / 2
    return polygon([(0, 0), (1, 0), (1, lo), (2, lo), (2, 0), (3, 0), (3, 1), (2, 1),
                    (2, hi), (1, hi), (1, 1), (0, 1)])
