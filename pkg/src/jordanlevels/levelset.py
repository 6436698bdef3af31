"""Exact level sets of the signed distance and epsilon-boundaries of compact sets.

Level sets are built by offsetting every edge (and a circle around every
vertex), splitting candidates at their mutual intersections, and keeping
the sub-pieces whose endpoints and midpoint lie at the target distance on
the correct side. Retained pieces are stitched into chains; junctions of
degree three or more are branch points.
"""
from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass, field

import numpy as np
from scipy.spatial import cKDTree

from . import _kernels
from .curve import JordanCurve, Subarc, pieces_length, signed_area
from .distance import grid_sample, nearest_points, signed_distance
from .geom import CircularArc, Edge, Overlap, Point, Segment, dist, intersect, sub, unit

EMPTY = "empty"
JORDAN = "jordan_curve"
MULTIPLE = "multiple_components"
NON_MANIFOLD = "non_manifold"


class LevelSetError(RuntimeError):
    """Internal consistency failure while stitching level pieces."""


# ------------------------------------------------------------------ results


@dataclass
class Chain:
    pieces: list
    closed: bool
    generators: list = field(default_factory=list)

    @property
    def length(self) -> float:
        return pieces_length(self.pieces)

    @property
    def start(self) -> Point:
        return self.pieces[0].start

    @property
    def end(self) -> Point:
        return self.pieces[-1].end

    def kinds(self) -> list[str]:
        return ["S" if isinstance(p, Segment) else "A" for p in self.pieces]

    def sample(self, spacing: float) -> np.ndarray:
        """Points along the chain no farther apart than ``spacing``."""
        out = []
        for p in self.pieces:
            k = max(1, int(math.ceil(p.length / spacing)))
            out.extend(p.point_at(i / k) for i in range(k))
        if not self.closed:
            out.append(self.pieces[-1].end)
        return np.array(out, dtype=float)

    def points_at(self, s) -> np.ndarray:
        """Points at arc lengths ``s`` from the chain start (cyclic when closed)."""
        cum = np.concatenate([[0.0], np.cumsum([p.length for p in self.pieces])])
        s = np.asarray(s, dtype=float)
        s = np.mod(s, cum[-1]) if self.closed else np.clip(s, 0.0, cum[-1])
        idx = np.clip(np.searchsorted(cum, s, side="right") - 1, 0, len(self.pieces) - 1)
        out = np.empty((len(s), 2))
        for k, (i, v) in enumerate(zip(idx, s)):
            p = self.pieces[i]
            out[k] = p.point_at(min(max((v - cum[i]) / p.length, 0.0), 1.0))
        return out

    def as_curve(self, tolerance=None) -> JordanCurve:
        if not self.closed:
            raise ValueError("open chain is not a Jordan curve")
        edges = list(self.pieces)
        if signed_area(edges) < 0:
            edges = [e.reversed() for e in reversed(edges)]
        return JordanCurve(edges, tolerance)


@dataclass
class LevelSetResult:
    epsilon: float
    chains: list[Chain]
    classification: str
    count: int = 0
    branch_points: list[Point] = field(default_factory=list)
    isolated_points: list[Point] = field(default_factory=list)
    pieces: list = field(default_factory=list, repr=False)

    @property
    def is_jordan(self) -> bool:
        return self.classification == JORDAN

    @property
    def length(self) -> float:
        return sum(c.length for c in self.chains)

    def label(self) -> str:
        if self.classification == MULTIPLE:
            return f"{MULTIPLE}({self.count})"
        return self.classification


@dataclass
class _Cand:
    prim: Edge
    gen: tuple
    full: bool = False


@dataclass
class _Piece:
    prim: Edge
    gens: set
    cand: int
    t0: float
    t1: float
    na: int = -1
    nb: int = -1


# ------------------------------------------------------------------- engine


def _offset_segment(seg: Segment, d: float, side: float) -> Segment:
    u = unit(sub(seg.b, seg.a))
    n = Point(-u[1] * side * d, u[0] * side * d)
    return Segment(Point(seg.a[0] + n[0], seg.a[1] + n[1]), Point(seg.b[0] + n[0], seg.b[1] + n[1]))


ANGLE_TOL = 1e-12


def _vertex_arc(v, t_in, t_out, d, side):
    """Offset arc around a vertex on one side; ``None`` unless the vertex is convex there.

    Only the directions between the two adjacent edge normals can be nearest
    to the vertex, so the full circle is never needed.
    """
    t_in, t_out = unit(t_in), unit(t_out)
    turn = math.atan2(t_in[0] * t_out[1] - t_in[1] * t_out[0], t_in[0] * t_out[0] + t_in[1] * t_out[1])
    if side > 0 and turn < -ANGLE_TOL:
        return CircularArc(v, d, math.atan2(t_in[0], -t_in[1]), turn)
    if side < 0 and turn > ANGLE_TOL:
        return CircularArc(v, d, math.atan2(-t_in[0], t_in[1]), turn)
    return None


def _cap(v, t, d, at_start):
    """Half circle closing an offset band at a free end with tangent ``t``."""
    t = unit(t)
    if at_start:
        return CircularArc(v, d, math.atan2(t[0], -t[1]), math.pi)
    return CircularArc(v, d, math.atan2(-t[0], t[1]), math.pi)


def _bboxes(prims):
    return np.array([p.bbox() for p in prims], dtype=float)


def _candidate_pairs(boxes, pad):
    lo = boxes[:, :2] - pad
    hi = boxes[:, 2:] + pad
    order = np.argsort(lo[:, 0], kind="stable")
    xs_lo = lo[order, 0]
    n = len(boxes)
    for a in range(n):
        i = order[a]
        stop = np.searchsorted(xs_lo, hi[i, 0], side="right")
        if stop <= a + 1:
            continue
        js = order[a + 1:stop]
        ok = (lo[js, 1] <= hi[i, 1]) & (hi[js, 1] >= lo[i, 1]) & (hi[js, 0] >= lo[i, 0])
        for j in js[ok]:
            yield (int(i), int(j)) if i < j else (int(j), int(i))


class _UnionFind:
    def __init__(self, n):
        self.p = list(range(n))

    def find(self, a):
        while self.p[a] != a:
            self.p[a] = self.p[self.p[a]]
            a = self.p[a]
        return a

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.p[max(ra, rb)] = min(ra, rb)


def _cluster(points: np.ndarray, radius: float) -> np.ndarray:
    """Label points so that any two within ``radius`` share a label (transitively)."""
    n = len(points)
    if n == 0:
        return np.zeros(0, dtype=int)
    uf = _UnionFind(n)
    for a, b in cKDTree(points).query_pairs(radius):
        uf.union(a, b)
    roots = np.array([uf.find(i) for i in range(n)])
    _, labels = np.unique(roots, return_inverse=True)
    return labels


def _merge_params(ts, eps):
    ts = sorted(ts)
    out = [ts[0]]
    for t in ts[1:]:
        if t - out[-1] > eps:
            out.append(t)
    if out[-1] < 1.0 and 1.0 - out[-1] <= eps:
        out[-1] = 1.0
    return out


def _trim(cands, points_cands, keep, tol):
    """Split candidates at mutual contacts and keep valid sub-pieces.

    ``keep(xy)`` returns a boolean mask for an (n, 2) array of points.
    Returns ``(pieces, contact_points)``.
    """
    prims = [c.prim for c in cands]
    params = [[0.0, 1.0] + ([0.5] if c.full else []) for c in cands]
    contacts = []
    if prims:
        boxes = _bboxes(prims)
        for i, j in _candidate_pairs(boxes, 4 * tol):
            for h in intersect(prims[i], prims[j], tol):
                if isinstance(h, Overlap):
                    params[i].extend(h.t1)
                    params[j].extend(h.t2)
                    contacts.extend([h.start, h.end])
                else:
                    params[i].append(h.t1)
                    params[j].append(h.t2)
                    contacts.append(h.point)
    subs = []
    for ci, (c, ts) in enumerate(zip(cands, params)):
        L = c.prim.length
        ts = _merge_params(ts, 2 * tol / L)
        for t0, t1 in zip(ts, ts[1:]):
            if (t1 - t0) * L <= 2 * tol:
                continue
            subs.append((ci, t0, t1))
    if subs:
        pts = np.empty((len(subs), 3, 2))
        for k, (ci, t0, t1) in enumerate(subs):
            p = prims[ci]
            pts[k, 0] = p.point_at(t0)
            pts[k, 1] = p.point_at(0.5 * (t0 + t1))
            pts[k, 2] = p.point_at(t1)
        ok = keep(pts.reshape(-1, 2)).reshape(-1, 3).all(axis=1)
    else:
        ok = np.zeros(0, dtype=bool)
    pieces = []
    for (ci, t0, t1), good in zip(subs, ok):
        if good:
            c = cands[ci]
            pieces.append(_Piece(c.prim.sub_piece(t0, t1), {c.gen}, ci, t0, t1))
    return pieces, contacts + list(points_cands)


def _stitch(pieces, contacts, keep, tol, closed=True, end_ok=None):
    """Dedupe, cluster endpoints, build chains, find branch and isolated points."""
    if not pieces:
        iso = []
        if contacts:
            C = np.array(contacts, dtype=float)
            good = keep(C)
            if good.any():
                labels = _cluster(C[good], 4 * tol)
                for lab in np.unique(labels):
                    iso.append(Point(*map(float, C[good][labels == lab][0])))
        return [], [], iso, [], len(iso) and 0
    ends = np.array([[p.prim.start, p.prim.end] for p in pieces], dtype=float).reshape(-1, 2)
    labels = _cluster(ends, 4 * tol)
    for k, p in enumerate(pieces):
        p.na, p.nb = int(labels[2 * k]), int(labels[2 * k + 1])
    node_xy = {}
    for k, lab in enumerate(labels):
        node_xy.setdefault(int(lab), Point(float(ends[k][0]), float(ends[k][1])))

    # dedupe coincident pieces (e.g. offsets of two walls of a narrow slot)
    buckets = defaultdict(list)
    uniq = []
    for p in pieces:
        key = (min(p.na, p.nb), max(p.na, p.nb), type(p.prim).__name__)
        mid = p.prim.point_at(0.5)
        dup = None
        for q in buckets[key]:
            if dist(mid, q.prim.point_at(0.5)) <= 8 * tol:
                dup = q
                break
        if dup is None:
            buckets[key].append(p)
            uniq.append(p)
        else:
            dup.gens |= p.gens
    pieces = [p for p in uniq if p.na != p.nb or p.prim.length > 8 * tol]

    adj = defaultdict(list)
    for k, p in enumerate(pieces):
        adj[p.na].append(k)
        adj[p.nb].append(k)
    deg = {n: len(v) for n, v in adj.items()}
    odd = [n for n, d in deg.items() if d == 1]
    if end_ok is not None:
        odd = [n for n in odd if not end_ok(node_xy[n])]
    if closed and odd:
        q = node_xy[odd[0]]
        raise LevelSetError(f"level chain has a free end at ({q[0]:.9g}, {q[1]:.9g})")
    branch_nodes = sorted(n for n, d in deg.items() if d >= 3)

    used = [False] * len(pieces)
    chains = []

    def walk(start_node, k):
        seq, gens = [], []
        node = start_node
        while True:
            used[k] = True
            p = pieces[k]
            if p.na == node:
                seq.append(p.prim)
                node = p.nb
            else:
                seq.append(p.prim.reversed())
                node = p.na
            gens.append(frozenset(p.gens))
            if deg[node] != 2:
                return seq, gens, node
            nxt = [m for m in adj[node] if not used[m]]
            if not nxt:
                return seq, gens, node
            k = nxt[0]

    for n in sorted(deg):
        if deg[n] == 2:
            continue
        for k in adj[n]:
            if not used[k]:
                seq, gens, last = walk(n, k)
                chains.append(Chain(seq, False, gens))
    for k in range(len(pieces)):
        if not used[k]:
            p = pieces[k]
            seq, gens, last = walk(p.na, k)
            chains.append(Chain(seq, last == p.na, gens))

    branch = [node_xy[n] for n in branch_nodes]
    iso = []
    if contacts:
        C = np.array(contacts, dtype=float)
        node_arr = np.array(list(node_xy.values()), dtype=float)
        far = cKDTree(node_arr).query(C)[0] > 4 * tol
        cand = C[far]
        if len(cand):
            good = keep(cand)
            cand = cand[good]
            if len(cand):
                labs = _cluster(cand, 4 * tol)
                for lab in np.unique(labs):
                    iso.append(Point(*map(float, cand[labs == lab][0])))
    # connected components of the piece graph
    uf = _UnionFind(max(node_xy) + 1 if node_xy else 0)
    for p in pieces:
        uf.union(p.na, p.nb)
    comps = len({uf.find(n) for n in deg})
    return chains, branch, iso, pieces, comps


def _classify(chains, branch, iso, comps):
    if not chains and not iso:
        return EMPTY, 0
    if branch:
        return NON_MANIFOLD, comps + len(iso)
    if len(chains) == 1 and chains[0].closed and not iso:
        return JORDAN, 1
    return MULTIPLE, comps + len(iso)


def _finish(eps, out):
    chains, branch, iso, pieces, comps = out
    cls, count = _classify(chains, branch, iso, comps)
    return LevelSetResult(eps, chains, cls, count, branch, iso, pieces)


def level_set_exact(curve: JordanCurve, eps: float) -> LevelSetResult:
    """The level set ``{x : signed_distance(x) = eps}`` as exact segment/arc chains."""
    tol = curve.tol
    if abs(eps) <= tol:
        raise ValueError("|eps| must exceed the curve tolerance")
    d = abs(eps)
    side = 1.0 if eps > 0 else -1.0
    cands, point_cands = [], []
    for i, e in enumerate(curve.edges):
        if isinstance(e, Segment):
            cands.append(_Cand(_offset_segment(e, d, side), ("e", i)))
        else:
            toward_center = 1.0 if e.sweep > 0 else -1.0
            r = e.radius - d if side == toward_center else e.radius + d
            if r > tol:
                cands.append(_Cand(CircularArc(e.center, r, e.start_angle, e.sweep), ("e", i)))
            elif abs(r) <= tol:
                point_cands.append(e.center)
        prev = curve.edges[i - 1]
        arc = _vertex_arc(e.start, prev.tangent_at(1.0), e.tangent_at(0.0), d, side)
        if arc is not None:
            cands.append(_Cand(arc, ("v", i)))

    table = curve.table
    thresh = d - 4 * tol

    def keep(xy):
        dd = _kernels.min_distance(xy[:, 0], xy[:, 1], table)
        w = _kernels.winding(xy[:, 0], xy[:, 1], table)
        inside = w != 0
        return (dd >= thresh) & (inside if eps > 0 else ~inside)

    def ridge_end(q):
        # a chain may stop where the distance attains a local maximum
        return nearest_points(curve, q).angular_span() >= math.pi - 1e-6

    pieces, contacts = _trim(cands, point_cands, keep, tol)
    return _finish(eps, _stitch(pieces, contacts, keep, tol, closed=True, end_ok=ridge_end))


def _as_pieces(lam):
    if isinstance(lam, Subarc):
        pcs = lam.pieces()
        pts = [lam.curve.point(lam.start)] if not pcs else []
        return pcs, pts
    if isinstance(lam, (Segment, CircularArc)):
        return [lam], []
    pcs, pts = [], []
    for item in lam:
        if isinstance(item, (Segment, CircularArc)):
            pcs.append(item)
        else:
            pts.append(Point(float(item[0]), float(item[1])))
    return pcs, pts


def eps_boundary_of_set(lam, eps: float, tol: float | None = None) -> LevelSetResult:
    """Points at unsigned distance exactly ``eps`` from a compact set.

    ``lam`` is a :class:`Subarc`, a single segment/arc, or a sequence mixing
    segments, arcs and points.
    """
    if not eps > 0:
        raise ValueError("eps must be positive")
    pcs, pts = _as_pieces(lam)
    verts = [p.start for p in pcs] + [p.end for p in pcs] + pts
    if tol is None:
        ext = np.array(verts, dtype=float)
        span = float(np.ptp(ext, axis=0).max()) if len(ext) > 1 else 0.0
        tol = max(1e-12, 1e-9 * max(span, eps))
    cands = []
    for i, e in enumerate(pcs):
        if isinstance(e, Segment):
            cands.append(_Cand(_offset_segment(e, eps, 1.0), ("e", i)))
            cands.append(_Cand(_offset_segment(e, eps, -1.0), ("e", i)))
        else:
            cands.append(_Cand(CircularArc(e.center, e.radius + eps, e.start_angle, e.sweep), ("e", i)))
            if e.radius - eps > tol:
                cands.append(_Cand(CircularArc(e.center, e.radius - eps, e.start_angle, e.sweep), ("e", i)))
    n = len(pcs)
    joined_next = [n > 1 and dist(pcs[k].end, pcs[(k + 1) % n].start) <= 4 * tol for k in range(n)]
    for k, e in enumerate(pcs):
        if joined_next[k]:
            nxt = pcs[(k + 1) % n]
            for side in (1.0, -1.0):
                arc = _vertex_arc(e.end, e.tangent_at(1.0), nxt.tangent_at(0.0), eps, side)
                if arc is not None:
                    cands.append(_Cand(arc, ("v", k)))
        else:
            cands.append(_Cand(_cap(e.end, e.tangent_at(1.0), eps, False), ("v", k)))
        if not joined_next[k - 1]:
            cands.append(_Cand(_cap(e.start, e.tangent_at(0.0), eps, True), ("v", k)))
    ends = [q for e in pcs for q in (e.start, e.end)]
    for k, q in enumerate(pts):
        if all(dist(q, r) > 4 * tol for r in ends):
            ends.append(q)
            cands.append(_Cand(CircularArc.circle(q, eps), ("p", k), full=True))
    table = _kernels.edge_table(pcs) if pcs else None
    P = np.array(pts, dtype=float).reshape(-1, 2)
    thresh = eps - 4 * tol

    def keep(xy):
        dd = np.full(len(xy), np.inf)
        if table is not None:
            dd = _kernels.min_distance(xy[:, 0], xy[:, 1], table)
        if len(P):
            dp = np.hypot(xy[:, None, 0] - P[None, :, 0], xy[:, None, 1] - P[None, :, 1]).min(axis=1)
            dd = np.minimum(dd, dp)
        return dd >= thresh

    pieces, contacts = _trim(cands, [], keep, tol)
    return _finish(eps, _stitch(pieces, contacts, keep, tol, closed=True))


# ----------------------------------------------------- level subset of a subarc


def _lambda_t_ranges(lam: Subarc, i: int):
    curve = lam.curve
    a, b = lam.s_range
    L = curve.length
    c0, c1 = curve.cumulative[i], curve.cumulative[i + 1]
    out = []
    for k in (-1, 0, 1):
        lo, hi = max(c0, a + k * L), min(c1, b + k * L)
        if hi > lo:
            out.append(((lo - c0) / (c1 - c0), (hi - c0) / (c1 - c0)))
    return out


def _foot_param(edge, q):
    if isinstance(edge, Segment):
        return edge.param_of(q)
    t = edge.param_of_angle(math.atan2(q[1] - edge.center[1], q[0] - edge.center[0]))
    full = 2 * math.pi / abs(edge.sweep)
    if t > 1.0 and t > 0.5 * (1.0 + full):
        t -= full
    return t


def level_subset_for_subarc(curve: JordanCurve, lam: Subarc, eps: float,
                            result: LevelSetResult | None = None) -> list[Chain]:
    """Chains of the level set whose distance to ``lam`` equals ``|eps|``."""
    if result is None:
        result = level_set_exact(curve, eps)
    tol = curve.tol
    out = []
    for p in result.pieces:
        intervals = []
        for kind, i in p.gens:
            if kind == "v":
                if lam.contains_s(float(curve.cumulative[i]), slack=tol):
                    intervals = [(0.0, 1.0)]
                    break
                continue
            edge = curve.edges[i]
            f0 = _foot_param(edge, p.prim.start)
            f1 = _foot_param(edge, p.prim.end)
            for lo, hi in _lambda_t_ranges(lam, i):
                if abs(f1 - f0) < 1e-15:
                    if lo - 1e-12 <= f0 <= hi + 1e-12:
                        intervals.append((0.0, 1.0))
                    continue
                u0, u1 = (lo - f0) / (f1 - f0), (hi - f0) / (f1 - f0)
                u0, u1 = max(0.0, min(u0, u1)), min(1.0, max(u0, u1))
                if u1 > u0:
                    intervals.append((u0, u1))
        if not intervals:
            continue
        intervals.sort()
        merged = [list(intervals[0])]
        for a, b in intervals[1:]:
            if a <= merged[-1][1] + 1e-12:
                merged[-1][1] = max(merged[-1][1], b)
            else:
                merged.append([a, b])
        for a, b in merged:
            if (b - a) * p.prim.length > 2 * tol:
                piece = p.prim if (a == 0.0 and b == 1.0) else p.prim.sub_piece(a, b)
                out.append(_Piece(piece, set(p.gens), p.cand, a, b))
    if not out:
        return []
    res = _stitch(out, [], lambda xy: np.ones(len(xy), dtype=bool), tol, closed=False)
    return res[0]


# ----------------------------------------------------------- grid oracle


def marching_squares(grid, level, center_value=None):
    """Contour polylines of ``grid.values == level``.

    Saddle cells are resolved with ``center_value(x, y)`` when given, else by
    the mean of the corners. Returns a list of ``(points, closed)``.
    """
    F = grid.values - level
    pos = F > 0
    ny, nx = F.shape
    h = grid.h
    ox, oy = grid.origin
    c0 = pos[:-1, :-1]
    c1 = pos[:-1, 1:]
    c2 = pos[1:, 1:]
    c3 = pos[1:, :-1]
    case = c0 * 1 + c1 * 2 + c2 * 4 + c3 * 8
    js, is_ = np.nonzero((case != 0) & (case != 15))

    def edge_point(key):
        kind, i, j = key
        if kind == "h":
            fa, fb = F[j, i], F[j, i + 1]
            t = fa / (fa - fb)
            return (ox + (i + t) * h, oy + j * h)
        fa, fb = F[j, i], F[j + 1, i]
        t = fa / (fa - fb)
        return (ox + i * h, oy + (j + t) * h)

    adj = defaultdict(list)
    for j, i in zip(js.tolist(), is_.tolist()):
        c = int(case[j, i])
        B, R, T, Lf = ("h", i, j), ("v", i + 1, j), ("h", i, j + 1), ("v", i, j)
        if c in (5, 10):
            if center_value is not None:
                cv = center_value(ox + (i + 0.5) * h, oy + (j + 0.5) * h) - level > 0
            else:
                cv = (F[j, i] + F[j, i + 1] + F[j + 1, i + 1] + F[j + 1, i]) > 0
            if c == 5:  # corners 0 and 2 positive
                segs = [(B, R), (T, Lf)] if cv else [(B, Lf), (R, T)]
            else:  # corners 1 and 3 positive
                segs = [(B, Lf), (R, T)] if cv else [(B, R), (T, Lf)]
        else:
            crossing = []
            if bool(c & 1) != bool(c & 2):
                crossing.append(B)
            if bool(c & 2) != bool(c & 4):
                crossing.append(R)
            if bool(c & 4) != bool(c & 8):
                crossing.append(T)
            if bool(c & 8) != bool(c & 1):
                crossing.append(Lf)
            segs = [tuple(crossing)]
        for a, b in segs:
            adj[a].append(b)
            adj[b].append(a)

    seen = set()
    lines = []
    keys = sorted(adj)
    for start in sorted(keys, key=lambda k: len(adj[k])):
        if start in seen:
            continue
        path = [start]
        seen.add(start)
        prev, cur = None, start
        closed = False
        while True:
            nxt = [k for k in adj[cur] if k != prev or len(adj[cur]) == 1 and False]
            nxt = [k for k in nxt if k not in seen or (k == start and len(path) > 2)]
            if not nxt:
                break
            k = nxt[0]
            if k == start:
                closed = True
                break
            path.append(k)
            seen.add(k)
            prev, cur = cur, k
        pts = np.array([edge_point(k) for k in path])
        lines.append((pts, closed))
    return lines


def level_set_grid(curve: JordanCurve, eps: float, h: float, cap: int | None = None):
    """Marching-squares contours of the sampled signed distance at ``eps``."""
    if not (0 < h <= abs(eps) / 4 + 1e-15):
        raise ValueError("grid spacing must satisfy 0 < h <= |eps|/4")
    x0, y0, x1, y1 = curve.bbox
    m = abs(eps) + 4 * h if eps < 0 else 2 * h
    bbox = (x0 - m, y0 - m, x1 + m, y1 + m)
    kw = {} if cap is None else {"cap": cap}
    grid = grid_sample(curve, bbox, h, **kw)
    return marching_squares(grid, eps, lambda x, y: signed_distance(curve, (x, y)))


# ------------------------------------------------------------ delta components


@dataclass
class DeltaComponents:
    epsilon: float
    count: int
    representatives: list[Point]
    exact_classification: str = ""
    exact_closed_chains: int = 0
    consistent: bool = True
    labels: np.ndarray | None = field(default=None, repr=False)
    grid: object = field(default=None, repr=False)


def delta_mask(grid, eps):
    return grid.values > eps if eps > 0 else grid.values < eps


def classify_components(curve: JordanCurve, eps: float, h: float | None = None,
                        cap: int | None = None) -> DeltaComponents:
    """Count connected components of the open set beyond level ``eps``."""
    from scipy import ndimage

    if eps == 0:
        raise ValueError("eps must be nonzero")
    if h is None:
        h = min(abs(eps) / 8, curve.diameter / 256)
    x0, y0, x1, y1 = curve.bbox
    m = abs(eps) + 4 * h if eps < 0 else 2 * h
    kw = {} if cap is None else {"cap": cap}
    grid = grid_sample(curve, (x0 - m, y0 - m, x1 + m, y1 + m), h, **kw)
    labels, count = ndimage.label(delta_mask(grid, eps))
    reps = []
    for k in range(1, count + 1):
        j, i = np.argwhere(labels == k)[0]
        reps.append(grid.node(int(i), int(j)))
    res = DeltaComponents(eps, int(count), reps, labels=labels, grid=grid)
    try:
        ex = level_set_exact(curve, eps)
    except ValueError:
        return res
    res.exact_classification = ex.classification
    res.exact_closed_chains = sum(1 for c in ex.chains if c.closed)
    if ex.classification in (JORDAN, MULTIPLE, EMPTY) and not ex.isolated_points:
        res.consistent = res.exact_closed_chains == count
    return res


# ------------------------------------------------------------- comparisons


def polyline_points(pts: np.ndarray, closed: bool, spacing: float) -> np.ndarray:
    P = np.asarray(pts, dtype=float)
    if closed:
        P = np.vstack([P, P[:1]])
    out = [P[:1]]
    for a, b in zip(P[:-1], P[1:]):
        k = max(1, int(math.ceil(np.hypot(*(b - a)) / spacing)))
        t = (np.arange(1, k + 1) / k)[:, None]
        out.append(a + t * (b - a))
    return np.vstack(out)


def hausdorff(A: np.ndarray, B: np.ndarray) -> float:
    """Symmetric Hausdorff distance between two point clouds."""
    da = cKDTree(B).query(A)[0].max()
    db = cKDTree(A).query(B)[0].max()
    return float(max(da, db))


def exact_vs_grid_hausdorff(result: LevelSetResult, grid_lines, h: float) -> float:
    sp = h / 8
    A = np.vstack([c.sample(sp) for c in result.chains])
    B = np.vstack([polyline_points(p, closed, sp) for p, closed in grid_lines])
    return hausdorff(A, B)
