"""Closed, simple, positively oriented chains of segments and arcs."""
from __future__ import annotations

import bisect
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple, Sequence

import numpy as np

from . import _kernels
from .geom import (CircularArc, Edge, Overlap, Point, Segment, Tolerance, dist,
                   intersect, cross)


class CurveError(ValueError):
    """Raised when a chain of edges is not a valid Jordan curve."""

    def __init__(self, kind, message, location=None):
        super().__init__(message)
        self.kind = kind
        self.location = location


class CurvePoint(NamedTuple):
    edge_index: int
    t: float


INSIDE, OUTSIDE, ON_BOUNDARY = "inside", "outside", "boundary"


def signed_area(edges) -> float:
    """Shoelace area with exact circular-segment corrections for arcs."""
    area = 0.0
    for e in edges:
        a, b = e.start, e.end
        area += 0.5 * cross(a, b)
        if isinstance(e, CircularArc):
            r, s = e.radius, e.sweep
            area += 0.5 * r * r * (s - math.sin(s))
    return area


class JordanCurve:
    """A Jordan curve built from segments and circular arcs.

    Edges must chain head to tail; use :func:`validate` to check closure,
    simplicity and orientation.
    """

    def __init__(self, edges: Sequence[Edge], tolerance: Tolerance | None = None):
        if len(edges) == 0:
            raise CurveError("open", "curve has no edges")
        self.edges = tuple(edges)
        self.tolerance = tolerance or Tolerance()

    def __len__(self):
        return len(self.edges)

    def __repr__(self):
        return f"JordanCurve({len(self.edges)} edges, length={self.length:.6g})"

    # ---- measures
    @cached_property
    def cumulative(self) -> np.ndarray:
        return np.concatenate([[0.0], np.cumsum([e.length for e in self.edges])])

    @property
    def length(self) -> float:
        return float(self.cumulative[-1])

    @cached_property
    def diameter(self) -> float:
        return pieces_diameter(self.edges)

    @cached_property
    def tol(self) -> float:
        return self.tolerance.effective(self.diameter)

    @cached_property
    def table(self) -> np.ndarray:
        return _kernels.edge_table(self.edges)

    @cached_property
    def edge_boxes(self) -> np.ndarray:
        return np.array([e.bbox() for e in self.edges], dtype=float).reshape(-1, 4)

    @cached_property
    def bbox(self):
        b = self.edge_boxes
        return (float(b[:, 0].min()), float(b[:, 1].min()), float(b[:, 2].max()), float(b[:, 3].max()))

    @property
    def vertices(self) -> list[Point]:
        return [e.start for e in self.edges]

    @property
    def signed_area(self) -> float:
        return signed_area(self.edges)

    # ---- parameterisation
    def s_of(self, cp: CurvePoint) -> float:
        i, t = cp
        return float(self.cumulative[i] + t * self.edges[i].length)

    def at_s(self, s: float) -> CurvePoint:
        L = self.length
        s = s % L
        i = bisect.bisect_right(self.cumulative, s) - 1
        i = min(max(i, 0), len(self.edges) - 1)
        t = (s - self.cumulative[i]) / self.edges[i].length
        return CurvePoint(i, min(max(t, 0.0), 1.0))

    def point(self, cp: CurvePoint) -> Point:
        return self.edges[cp[0]].point_at(cp[1])

    def point_at_s(self, s: float) -> Point:
        return self.point(self.at_s(s))

    def pieces_between(self, s0: float, s1: float) -> list[Edge]:
        """Edge pieces traversed going forward from ``s0`` to ``s1`` (cyclic)."""
        L = self.length
        a = s0 % L
        span = (s1 - s0) % L
        if span == 0.0:
            return []
        b = a + span
        cum = self.cumulative
        n = len(self.edges)
        i = min(max(bisect.bisect_right(cum, a) - 1, 0), n - 1)
        wraps = 0
        out = []
        while True:
            e = self.edges[i]
            lo = cum[i] + wraps * L
            hi = cum[i + 1] + wraps * L
            u0, u1 = max(a, lo), min(b, hi)
            if u1 > u0:
                t0 = (u0 - lo) / e.length
                t1 = 1.0 if u1 == hi else (u1 - lo) / e.length
                out.append(e if (t0 == 0.0 and t1 == 1.0) else e.sub_piece(t0, t1))
            if hi >= b:
                break
            i += 1
            if i == n:
                i, wraps = 0, wraps + 1
        return out

    # ---- transforms
    def reversed(self) -> "JordanCurve":
        return JordanCurve([e.reversed() for e in reversed(self.edges)], self.tolerance)

    def rotated(self, k: int) -> "JordanCurve":
        k %= len(self.edges)
        return JordanCurve(self.edges[k:] + self.edges[:k], self.tolerance)

    def transformed(self, scale: float = 1.0, angle: float = 0.0, shift=(0.0, 0.0)) -> "JordanCurve":
        """Image under the similarity ``z -> scale * e^{i angle} z + shift``."""
        c, s_ = math.cos(angle), math.sin(angle)

        def f(p):
            return Point(scale * (c * p[0] - s_ * p[1]) + shift[0],
                         scale * (s_ * p[0] + c * p[1]) + shift[1])

        out = []
        for e in self.edges:
            if isinstance(e, Segment):
                out.append(Segment(f(e.a), f(e.b)))
            else:
                out.append(CircularArc(f(e.center), e.radius * scale, e.start_angle + angle, e.sweep))
        return JordanCurve(out, self.tolerance)

    # ---- queries
    def contains(self, p) -> str:
        return contains(self, p)


def _hull(P):
    if len(P) <= 8:
        return P
    from scipy.spatial import ConvexHull, QhullError
    try:
        return P[ConvexHull(P).vertices]
    except (QhullError, ValueError):
        return P


def _max_pairwise(P) -> float:
    P = _hull(P)
    d = 0.0
    for k in range(0, len(P), 512):
        blk = P[k:k + 512]
        dd = np.hypot(blk[:, None, 0] - P[None, :, 0], blk[:, None, 1] - P[None, :, 1])
        d = max(d, float(dd.max()))
    return d


def pieces_diameter(pieces, extra_points=()) -> float:
    """Diameter of a union of segments/arcs.

    Candidates are piece endpoints, axis-extremal arc points and ``extra_points``;
    hull candidates are then paired with their farthest point on every arc.
    """
    pts = list(extra_points)
    arcs = []
    for e in pieces:
        pts.append(e.start)
        pts.append(e.end)
        if isinstance(e, CircularArc):
            arcs.append(e)
            pts.extend(e.point_at(t) for t in e.extremal_params())
    if not pts:
        return 0.0
    P = _hull(np.unique(np.array(pts, dtype=float), axis=0))
    for _ in range(2):
        if not arcs:
            break
        new = []
        for a in arcs:
            v = np.asarray(a.center) - P
            th = np.arctan2(v[:, 1], v[:, 0])
            rel = (th - a.start_angle) * (1.0 if a.sweep > 0 else -1.0)
            on = np.mod(rel, 2 * math.pi) <= abs(a.sweep)
            on &= np.hypot(v[:, 0], v[:, 1]) > 0
            th = th[on]
            if th.size:
                new.append(np.column_stack([a.center[0] + a.radius * np.cos(th),
                                            a.center[1] + a.radius * np.sin(th)]))
        if not new:
            break
        P = _hull(np.unique(np.vstack([P] + new), axis=0))
    return _max_pairwise(P)


def pieces_length(pieces) -> float:
    return float(sum(e.length for e in pieces))


# ------------------------------------------------------------------ subarcs


@dataclass(frozen=True)
class Subarc:
    """Closed subarc from ``start`` to ``end``; ``forward`` follows curve orientation.

    ``start == end`` denotes a degenerate point subarc.
    """

    curve: JordanCurve = field(repr=False)
    start: CurvePoint
    end: CurvePoint
    direction: str = "forward"
    tied: bool = False

    @property
    def s_range(self) -> tuple[float, float]:
        """Forward arc-length range ``(a, b)`` covered, with ``a <= b < a + L``."""
        a, b = self.curve.s_of(self.start), self.curve.s_of(self.end)
        if self.direction == "backward":
            a, b = b, a
        L = self.curve.length
        span = (b - a) % L
        return a, a + span

    def pieces(self) -> list[Edge]:
        a, b = self.s_range
        if b == a:
            return []
        return self.curve.pieces_between(a, b)

    @property
    def length(self) -> float:
        a, b = self.s_range
        return b - a

    @property
    def diameter(self) -> float:
        pcs = self.pieces()
        if not pcs:
            return 0.0
        return pieces_diameter(pcs)

    def contains_s(self, s: float, slack: float = 0.0) -> bool:
        a, b = self.s_range
        L = self.curve.length
        return ((s - a) % L) <= (b - a) + slack or ((a - s) % L) <= slack

    def endpoints(self) -> tuple[Point, Point]:
        return self.curve.point(self.start), self.curve.point(self.end)


def _mid_s(curve, a, b):
    return ((a + b) / 2.0) % curve.length


def _both_subarcs(curve, x: CurvePoint, y: CurvePoint):
    fwd = Subarc(curve, x, y, "forward")
    bwd = Subarc(curve, x, y, "backward")
    return fwd, bwd


def _pick(curve, fwd, bwd, vf, vb):
    tol = curve.tol
    if abs(vf - vb) <= tol:
        mf = _mid_s(curve, *fwd.s_range)
        mb = _mid_s(curve, *bwd.s_range)
        chosen = fwd if mf <= mb else bwd
        return Subarc(curve, chosen.start, chosen.end, chosen.direction, tied=True)
    return fwd if vf < vb else bwd


def subarc_smaller_diameter(curve: JordanCurve, x: CurvePoint, y: CurvePoint) -> Subarc:
    """The subarc between ``x`` and ``y`` of smaller diameter.

    Ties (within tolerance) go to the subarc whose arc-length midpoint has
    the smaller curve parameter; the result is flagged ``tied``.
    """
    if curve.s_of(x) == curve.s_of(y):
        raise ValueError("x and y must differ")
    fwd, bwd = _both_subarcs(curve, x, y)
    return _pick(curve, fwd, bwd, fwd.diameter, bwd.diameter)


def shorter_subarc_by_length(curve: JordanCurve, x: CurvePoint, y: CurvePoint) -> Subarc:
    if curve.s_of(x) == curve.s_of(y):
        raise ValueError("x and y must differ")
    fwd, bwd = _both_subarcs(curve, x, y)
    return _pick(curve, fwd, bwd, fwd.length, bwd.length)


# -------------------------------------------------------------- point tests


def contains(curve: JordanCurve, p) -> str:
    """Classify ``p`` as inside the bounded component, outside, or on the curve."""
    px = np.array([p[0]], dtype=float)
    py = np.array([p[1]], dtype=float)
    d = _kernels.min_distance(px, py, curve.table)[0]
    if d <= curve.tol:
        return ON_BOUNDARY
    w = _kernels.winding(px, py, curve.table)[0]
    return INSIDE if w != 0 else OUTSIDE


# --------------------------------------------------------------- validation


@dataclass
class ValidationReport:
    ok: bool
    kind: str = "ok"
    message: str = ""
    location: object = None

    def __bool__(self):
        return self.ok


def _edge_pairs_overlapping(edges, pad):
    boxes = np.array([e.bbox() for e in edges])
    lo = boxes[:, :2] - pad
    hi = boxes[:, 2:] + pad
    n = len(edges)
    for i in range(n):
        ok = np.all(lo[i + 1:] <= hi[i], axis=1) & np.all(hi[i + 1:] >= lo[i], axis=1)
        for j in np.flatnonzero(ok) + i + 1:
            yield i, int(j)


def validate(curve: JordanCurve, auto_reverse: bool = False):
    """Check closure, simplicity and positive orientation.

    Returns a :class:`ValidationReport` for the first violation. With
    ``auto_reverse`` a negatively oriented but otherwise valid curve is
    reversed; the returned report then carries the corrected curve in
    ``location``.
    """
    edges = curve.edges
    tol = curve.tol
    n = len(edges)
    for i, e in enumerate(edges):
        if e.length <= tol:
            return ValidationReport(False, "degenerate", f"edge {i} is degenerate", i)
        nxt = edges[(i + 1) % n]
        if dist(e.end, nxt.start) > 4 * tol:
            return ValidationReport(False, "open", f"chain break after edge {i}", i)
    for i, j in _edge_pairs_overlapping(edges, tol):
        adjacent = (j == i + 1) or (i == 0 and j == n - 1)
        for h in intersect(edges[i], edges[j], tol):
            if isinstance(h, Overlap):
                return ValidationReport(False, "self_intersection",
                                        f"edges {i} and {j} overlap", h.start)
            q = h.point
            if adjacent:
                shared = edges[i].end if j == i + 1 else edges[i].start
                if n == 2:
                    if dist(q, edges[0].start) <= 4 * tol or dist(q, edges[0].end) <= 4 * tol:
                        continue
                elif dist(q, shared) <= 4 * tol:
                    continue
            return ValidationReport(False, "self_intersection",
                                    f"edges {i} and {j} cross at ({q[0]:.6g}, {q[1]:.6g})", q)
    if curve.signed_area <= 0:
        if auto_reverse:
            return ValidationReport(True, "reversed", "orientation reversed", curve.reversed())
        return ValidationReport(False, "negative_orientation", "curve is clockwise")
    return ValidationReport(True)


def checked(edges, tolerance=None, auto_reverse=True) -> JordanCurve:
    """Build a curve and raise :class:`CurveError` unless it validates."""
    c = JordanCurve(edges, tolerance)
    rep = validate(c, auto_reverse=auto_reverse)
    if not rep.ok:
        raise CurveError(rep.kind, rep.message, rep.location)
    if rep.kind == "reversed":
        return rep.location
    return c
