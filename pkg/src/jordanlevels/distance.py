"""Signed distance to a Jordan curve, nearest-point sets and grid sampling."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .curve import CurvePoint, JordanCurve
from .geom import CircularArc, Point, dist

GRID_CAP = 10_000_000


class GridTooLarge(ValueError):
    def __init__(self, nodes, cap, h_hint):
        super().__init__(f"grid needs {nodes} nodes (cap {cap}); use h >= {h_hint:.6g}")
        self.nodes = nodes
        self.h_hint = h_hint


def signed_distances(curve: JordanCurve, px, py) -> np.ndarray:
    """Vectorised signed distance: positive inside, negative outside, 0 on the band."""
    px = np.asarray(px, dtype=float)
    py = np.asarray(py, dtype=float)
    d = _kernels.min_distance(px, py, curve.table)
    w = _kernels.winding(px, py, curve.table)
    out = np.where(w != 0, d, -d)
    return np.where(d <= curve.tol, 0.0, out)


def signed_distance(curve: JordanCurve, p) -> float:
    return float(signed_distances(curve, np.array([p[0]]), np.array([p[1]]))[0])


def unsigned_distance(curve: JordanCurve, p) -> float:
    return float(_kernels.min_distance(np.array([p[0]]), np.array([p[1]]), curve.table)[0])


@dataclass
class NearestPointSet:
    query: Point
    distance: float
    points: list[CurvePoint]
    locations: list[Point]

    def angular_span(self) -> float:
        """Smallest arc of directions (radians) around ``query`` containing every point."""
        if len(self.locations) < 2:
            return 0.0
        ang = sorted(math.atan2(q[1] - self.query[1], q[0] - self.query[0]) for q in self.locations)
        gaps = [b - a for a, b in zip(ang, ang[1:])] + [ang[0] + 2 * math.pi - ang[-1]]
        return 2 * math.pi - max(gaps)


def nearest_points(curve: JordanCurve, p, tol_multiplier: float = 1e-6) -> NearestPointSet:
    """All curve points realising ``dist(p, curve)`` within a relative band.

    When ``p`` is the centre of an arc edge whose radius equals the distance,
    the whole arc is nearest; it is represented by its endpoints and midpoint.
    """
    p = Point(float(p[0]), float(p[1]))
    d = unsigned_distance(curve, p)
    band = d * (1.0 + tol_multiplier) + curve.tol
    B = curve.edge_boxes
    gx = np.maximum(np.maximum(B[:, 0] - p[0], p[0] - B[:, 2]), 0.0)
    gy = np.maximum(np.maximum(B[:, 1] - p[1], p[1] - B[:, 3]), 0.0)
    near = np.flatnonzero(np.hypot(gx, gy) <= band)
    per_edge = {int(i): curve.edges[i].closest(p) for i in near}
    merge = max(curve.tol * 4, d * tol_multiplier)
    cps, locs = [], []

    def push(i, t):
        q = curve.edges[i].point_at(t)
        for k, r in enumerate(locs):
            if dist(q, r) <= merge:
                return
        cps.append(CurvePoint(i, t))
        locs.append(q)

    for i, (t, di) in per_edge.items():
        if di > band:
            continue
        e = curve.edges[i]
        if isinstance(e, CircularArc) and dist(p, e.center) <= merge:
            for tt in (0.0, 0.5, 1.0):
                push(i, tt)
        else:
            push(i, t)
    return NearestPointSet(p, d, cps, locs)


@dataclass
class ScalarGrid:
    """Signed distances at nodes ``origin + (i*h, j*h)``; ``values[j, i]``."""

    origin: Point
    h: float
    nx: int
    ny: int
    values: np.ndarray

    def node(self, i, j) -> Point:
        return Point(self.origin[0] + i * self.h, self.origin[1] + j * self.h)

    @property
    def xs(self):
        return self.origin[0] + self.h * np.arange(self.nx)

    @property
    def ys(self):
        return self.origin[1] + self.h * np.arange(self.ny)


def grid_shape(bbox, h):
    x0, y0, x1, y1 = bbox
    nx = int(math.floor((x1 - x0) / h + 1e-9)) + 1
    ny = int(math.floor((y1 - y0) / h + 1e-9)) + 1
    return nx, ny


def grid_sample(curve: JordanCurve, bbox, h: float, cap: int = GRID_CAP) -> ScalarGrid:
    if not h > 0:
        raise ValueError("h must be positive")
    nx, ny = grid_shape(bbox, h)
    if nx * ny > cap:
        area = (bbox[2] - bbox[0]) * (bbox[3] - bbox[1])
        raise GridTooLarge(nx * ny, cap, math.sqrt(area / cap) * 1.01)
    xs = bbox[0] + h * np.arange(nx)
    ys = bbox[1] + h * np.arange(ny)
    X, Y = np.meshgrid(xs, ys)
    vals = signed_distances(curve, X.ravel(), Y.ravel()).reshape(ny, nx)
    return ScalarGrid(Point(bbox[0], bbox[1]), h, nx, ny, vals)
