"""Chordal, linear-approximation, 2-point and chord-arc constants of a curve.

Suprema are estimated on a deterministic sample set (vertices, a uniform
arc-length net, dyadic ladders at every vertex and arc extremal points),
then refined by golden-section search with exact objectives. Reported
values are exact evaluations at the witness, hence lower bounds of the
true suprema.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .curve import CurvePoint, JordanCurve, subarc_smaller_diameter
from .geom import CircularArc, Point, Segment

GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class Sampler:
    net: int = 1024
    ladder: int = 6
    max_points: int = 2500
    refine_iters: int = 20

    def __post_init__(self):
        if self.net <= 0 or self.max_points <= 0:
            raise ValueError("sampler budget must be positive")


DEFAULT_SAMPLER = Sampler()


@dataclass
class ConstantReport:
    kind: str
    value: float
    witness: tuple
    r0: float | None = None
    samples_used: int = 0
    refined: bool = False
    net: int = 0
    sequence: list = field(default_factory=list)

    def as_record(self) -> dict:
        rec = {"kind": self.kind, "value": f"{self.value:.12g}"}
        if self.r0 is not None:
            rec["r0"] = f"{self.r0:.12g}"
        w = self.witness
        if w:
            rec["witness"] = ";".join(
                f"{a[0]}:{a[1]:.12g}" if isinstance(a, tuple) else f"{a:.12g}" for a in w)
        rec["samples"] = str(self.samples_used)
        rec["net"] = str(self.net)
        rec["refined"] = "true" if self.refined else "false"
        if self.sequence:
            rec["sequence"] = ",".join(f"{r:.6g}:{v:.9g}" for r, v in self.sequence)
        return rec


# ------------------------------------------------------------------ sampling


@dataclass
class Samples:
    s: np.ndarray
    xy: np.ndarray
    feature: np.ndarray
    curve: JordanCurve = field(repr=False)
    _diam: np.ndarray | None = field(default=None, repr=False)

    def __len__(self):
        return len(self.s)

    @property
    def diam(self) -> np.ndarray:
        """``diam[i, L]``: diameter of samples ``i .. i+L`` (cyclic), ``0 <= L <= M``."""
        if self._diam is None:
            M = len(self.s)
            X, Y = self.xy[:, 0], self.xy[:, 1]
            D = np.zeros((M, M + 1))
            nxt = np.roll(np.arange(M), -1)
            idx = np.arange(M)
            for L in range(1, M + 1):
                far = (idx + L) % M
                chord = np.hypot(X[far] - X, Y[far] - Y)
                D[:, L] = np.maximum(np.maximum(D[:, L - 1], D[nxt, L - 1]), chord)
            self._diam = D
        return self._diam

    def feat_next(self) -> np.ndarray:
        M = len(self.s)
        f2 = np.concatenate([self.feature, self.feature])
        out = np.full(2 * M + 1, 2 * M, dtype=np.int64)
        nxt = 2 * M
        for k in range(2 * M - 1, -1, -1):
            if f2[k]:
                nxt = k
            out[k] = nxt
        return out

    def point(self, k: int) -> CurvePoint:
        return self.curve.at_s(float(self.s[k]))


def build_samples(curve: JordanCurve, sampler: Sampler = DEFAULT_SAMPLER) -> Samples:
    L = curve.length
    cum = curve.cumulative
    edges = curve.edges
    nv = len(edges)
    fixed = [float(c) for c in cum[:-1]]
    arc_s = []
    for i, e in enumerate(edges):
        if isinstance(e, CircularArc):
            ts = set(e.extremal_params()) | {k / 8 for k in range(1, 8)}
            arc_s.extend(float(cum[i] + t * e.length) for t in sorted(ts))
    budget = sampler.max_points - nv - len(arc_s)
    net = min(sampler.net, max(budget // 2, 16))
    K = 0
    if sampler.ladder > 0 and budget - net > 0:
        K = int(min(sampler.ladder, (budget - net) // (2 * nv)))
    ladder = []
    for i in range(nv):
        prev = edges[i - 1].length
        nxt = edges[i].length
        for k in range(1, K + 1):
            ladder.append(float(cum[i] + nxt * 2.0 ** -k))
            ladder.append(float(cum[i] - prev * 2.0 ** -k))
    grid = list(L * np.arange(net) / net)
    s = np.mod(np.array(fixed + arc_s + ladder + grid, dtype=float), L)
    s = np.unique(s)
    keep = np.concatenate([[True], np.diff(s) > 1e-12 * L])
    s = s[keep]
    if len(s) > 1 and L - s[-1] + s[0] <= 1e-12 * L:
        s = s[:-1]
    pts = np.array([curve.point_at_s(v) for v in s], dtype=float)
    verts = np.isin(s, np.array(fixed))
    on_arc = np.zeros(len(s), dtype=bool)
    for k, v in enumerate(s):
        i = curve.at_s(float(v))[0]
        on_arc[k] = isinstance(edges[i], CircularArc)
    return Samples(s, pts, verts | on_arc, curve)


# --------------------------------------------------------- exact objectives


def _as_cp(curve, x):
    if isinstance(x, CurvePoint):
        return x
    if isinstance(x, (int, float, np.floating)):
        return curve.at_s(float(x))
    best = None
    for i, e in enumerate(curve.edges):
        t, d = e.closest(x)
        if best is None or d < best[0]:
            best = (d, CurvePoint(i, t))
    return best[1]


def _max_line_dev(pieces, x: Point, u: Point) -> float:
    """Max of ``|cross(u, q - x)|`` over the pieces (``u`` need not be unit)."""
    best = 0.0
    for e in pieces:
        cands = [e.start, e.end]
        if isinstance(e, CircularArc):
            nrm = math.hypot(u[0], u[1])
            if nrm > 0:
                th = math.atan2(u[0], -u[1])
                for a in (th, th + math.pi):
                    if e.contains_angle(a):
                        cands.append(Point(e.center[0] + e.radius * math.cos(a),
                                           e.center[1] + e.radius * math.sin(a)))
        for q in cands:
            v = abs(u[0] * (q[1] - x[1]) - u[1] * (q[0] - x[0]))
            if v > best:
                best = v
    return best


def zeta_pair(curve: JordanCurve, x, y) -> float:
    """Deviation of the smaller-diameter subarc from the chord line, over the chord."""
    cx, cy = _as_cp(curve, x), _as_cp(curve, y)
    px, py = curve.point(cx), curve.point(cy)
    u = Point(py[0] - px[0], py[1] - px[1])
    c2 = u[0] * u[0] + u[1] * u[1]
    if c2 == 0.0:
        raise ValueError("x and y must differ")
    arc = subarc_smaller_diameter(curve, cx, cy)
    return _max_line_dev(arc.pieces(), px, u) / c2


def two_point_ratio(curve: JordanCurve, x, y) -> float:
    cx, cy = _as_cp(curve, x), _as_cp(curve, y)
    ch = math.dist(curve.point(cx), curve.point(cy))
    if ch == 0.0:
        raise ValueError("x and y must differ")
    return subarc_smaller_diameter(curve, cx, cy).diameter / ch


def chord_arc_ratio(curve: JordanCurve, x, y) -> float:
    cx, cy = _as_cp(curve, x), _as_cp(curve, y)
    ch = math.dist(curve.point(cx), curve.point(cy))
    if ch == 0.0:
        raise ValueError("x and y must differ")
    ds = (curve.s_of(cy) - curve.s_of(cx)) % curve.length
    return min(ds, curve.length - ds) / ch


# ---------------------------------------------------------------- refinement


def _golden_max(f, lo, hi, iters):
    a, b = lo, hi
    c = b - GOLDEN * (b - a)
    d = a + GOLDEN * (b - a)
    fc, fd = f(c), f(d)
    best = max((fc, c), (fd, d))
    for _ in range(iters):
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - GOLDEN * (b - a)
            fc = f(c)
            best = max(best, (fc, c))
        else:
            a, c, fc = c, d, fd
            d = a + GOLDEN * (b - a)
            fd = f(d)
            best = max(best, (fd, d))
    return best


def _refine(curve, objective, si, sj, half, iters, rounds=2):
    """Alternating golden-section ascent on the two arc-length parameters."""
    def safe(a, b):
        try:
            return objective(a, b)
        except ValueError:
            return -math.inf

    best = safe(si, sj)
    for _ in range(rounds):
        v, a = _golden_max(lambda t: safe(t, sj), si - half, si + half, iters)
        if v > best:
            best, si = v, a
        v, b = _golden_max(lambda t: safe(si, t), sj - half, sj + half, iters)
        if v > best:
            best, sj = v, b
    return best, si, sj


def _spacing(samples, k):
    M = len(samples)
    L = samples.curve.length
    a = (samples.s[(k + 1) % M] - samples.s[k]) % L
    b = (samples.s[k] - samples.s[k - 1]) % L
    return max(min(a, b), 1e-12 * L)


def _witness(curve, si, sj):
    return (tuple(curve.at_s(si)), tuple(curve.at_s(sj)))


# ------------------------------------------------------------------- suprema


def zeta_sup(curve: JordanCurve, r0: float | None = None,
             sampler: Sampler = DEFAULT_SAMPLER, samples: Samples | None = None) -> ConstantReport:
    """Estimate ``sup zeta(x, y)`` over pairs with ``|x - y| <= r0``."""
    if r0 is None:
        r0 = curve.diameter / 2
    if not r0 > 0:
        raise ValueError("r0 must be positive")
    S = samples if samples is not None else build_samples(curve, sampler)
    tol = curve.tol
    v, i, j = _kernels.zeta_scan(S.xy[:, 0], S.xy[:, 1], S.s, S.feat_next(), S.diam,
                                 r0, curve.length, tol)
    if i < 0:
        return ConstantReport("zeta_sup", 0.0, (), r0, len(S), False, sampler.net)
    si, sj = float(S.s[i]), float(S.s[j])
    lim = r0 * (1 + 1e-12) + tol

    def obj(a, b):
        pa, pb = curve.point_at_s(a), curve.point_at_s(b)
        if math.dist(pa, pb) > lim:
            return -math.inf
        return zeta_pair(curve, a, b)

    half = min(_spacing(S, i), _spacing(S, j))
    best, si, sj = _refine(curve, obj, si, sj, half, sampler.refine_iters)
    return ConstantReport("zeta_sup", max(best, 0.0), _witness(curve, si, sj), r0, len(S),
                          True, sampler.net)


def zeta_limit(curve: JordanCurve, schedule=None, sampler: Sampler = DEFAULT_SAMPLER) -> ConstantReport:
    """``zeta_sup`` along a decreasing scale schedule; the last value estimates the limit."""
    if schedule is None:
        schedule = [curve.diameter * 2.0 ** -k for k in range(1, 9)]
    schedule = sorted((float(r) for r in schedule), reverse=True)
    S = build_samples(curve, sampler)
    reps = [zeta_sup(curve, r, sampler, S) for r in schedule]
    # the supremum over a smaller scale can never exceed that of a larger one
    vals = [r.value for r in reps]
    for k in range(len(vals) - 2, -1, -1):
        vals[k] = max(vals[k], vals[k + 1])
    seq = list(zip(schedule, vals))
    last = reps[-1]
    return ConstantReport("zeta_limit", vals[-1], last.witness, schedule[-1], len(S), True,
                          sampler.net, seq)


def _pair_blocks(M, block=256):
    for i0 in range(0, M - 1, block):
        I = np.arange(i0, min(i0 + block, M - 1))
        J = np.arange(M)
        ii, jj = np.meshgrid(I, J, indexing="ij")
        m = jj > ii
        yield ii[m], jj[m]


def _pair_sup(curve, S, ratio_fn):
    best, bi, bj = -1.0, -1, -1
    for ii, jj in _pair_blocks(len(S)):
        vals = ratio_fn(ii, jj)
        if vals.size == 0:
            continue
        k = int(np.argmax(vals))
        if vals[k] > best:
            best, bi, bj = float(vals[k]), int(ii[k]), int(jj[k])
    return best, bi, bj


def two_point_constant(curve: JordanCurve, sampler: Sampler = DEFAULT_SAMPLER) -> ConstantReport:
    """Estimate ``sup diam Gamma(x, y) / |x - y|`` over the smaller-diameter subarcs."""
    S = build_samples(curve, sampler)
    D = S.diam
    M = len(S)
    X, Y = S.xy[:, 0], S.xy[:, 1]
    tol = curve.tol

    def ratio(ii, jj):
        ch = np.hypot(X[jj] - X[ii], Y[jj] - Y[ii])
        L = jj - ii
        d = np.minimum(D[ii, L], D[jj, M - L])
        return np.where(ch > tol, d / np.maximum(ch, tol), 0.0)

    _, i, j = _pair_sup(curve, S, ratio)
    if i < 0:
        return ConstantReport("two_point", 1.0, (), None, M, False, sampler.net)
    half = min(_spacing(S, i), _spacing(S, j))
    best, si, sj = _refine(curve, lambda a, b: two_point_ratio(curve, a, b),
                           float(S.s[i]), float(S.s[j]), half, sampler.refine_iters)
    return ConstantReport("two_point", max(best, 1.0), _witness(curve, si, sj), None, M,
                          True, sampler.net)


def chord_arc_constant(curve: JordanCurve, sampler: Sampler = DEFAULT_SAMPLER) -> ConstantReport:
    """Estimate ``sup l(shorter subarc) / |x - y|``."""
    S = build_samples(curve, sampler)
    M = len(S)
    X, Y = S.xy[:, 0], S.xy[:, 1]
    Ltot = curve.length
    tol = curve.tol

    def ratio(ii, jj):
        ch = np.hypot(X[jj] - X[ii], Y[jj] - Y[ii])
        ds = S.s[jj] - S.s[ii]
        ell = np.minimum(ds, Ltot - ds)
        return np.where(ch > tol, ell / np.maximum(ch, tol), 0.0)

    _, i, j = _pair_sup(curve, S, ratio)
    if i < 0:
        return ConstantReport("chord_arc", 1.0, (), None, M, False, sampler.net)
    half = min(_spacing(S, i), _spacing(S, j))
    best, si, sj = _refine(curve, lambda a, b: chord_arc_ratio(curve, a, b),
                           float(S.s[i]), float(S.s[j]), half, sampler.refine_iters)
    return ConstantReport("chord_arc", max(best, 1.0), _witness(curve, si, sj), None, M,
                          True, sampler.net)


def check_chordal(curve: JordanCurve, zeta: float, r0: float, tolerance: float = 1e-9,
                  sampler: Sampler = DEFAULT_SAMPLER):
    """``(ok, report)``: whether the measured ``zeta_sup(r0)`` is at most ``zeta``."""
    if not (zeta > 0 and r0 > 0):
        raise ValueError("zeta and r0 must be positive")
    rep = zeta_sup(curve, r0, sampler)
    return rep.value <= zeta + tolerance, rep


# ------------------------------------------------------- linear approximation


def _clip_to_disk(e, c, r):
    """Sub-pieces of ``e`` inside the closed disk ``B(c, r)``."""
    if isinstance(e, Segment):
        ax, ay = e.a[0] - c[0], e.a[1] - c[1]
        dx, dy = e.b[0] - e.a[0], e.b[1] - e.a[1]
        A = dx * dx + dy * dy
        B = 2 * (ax * dx + ay * dy)
        C = ax * ax + ay * ay - r * r
        disc = B * B - 4 * A * C
        if disc < 0:
            return []
        sq = math.sqrt(disc)
        t0 = max(0.0, (-B - sq) / (2 * A))
        t1 = min(1.0, (-B + sq) / (2 * A))
        if t1 < t0:
            return []
        return [e.sub_piece(t0, t1)]
    # arc: parameters where |q - c| <= r
    d = math.dist(e.center, c)
    R = e.radius
    if d + R <= r:
        return [e]
    if d >= R + r or d + r <= R:
        return []
    cosv = (R * R + d * d - r * r) / (2 * R * d)
    cosv = max(-1.0, min(1.0, cosv))
    half = math.acos(cosv)
    base = math.atan2(c[1] - e.center[1], c[0] - e.center[0])
    window = CircularArc(e.center, R, base - half, 2 * half)
    out = []
    ts = sorted({0.0, 1.0, *[t for t in (e.param_of_angle(base - half), e.param_of_angle(base + half))
                             if t <= 1.0]})
    for t0, t1 in zip(ts, ts[1:]):
        if t1 - t0 <= 1e-15:
            continue
        mid = e.point_at(0.5 * (t0 + t1))
        th = math.atan2(mid[1] - e.center[1], mid[0] - e.center[0])
        if window.contains_angle(th):
            out.append(e.sub_piece(t0, t1))
    return out


def delta_linear(curve: JordanCurve, x, r: float, grid: int = 720, iters: int = 40) -> ConstantReport:
    """``min_P max_{z in curve, |z-x|<=r} dist(z, P) / r`` over lines ``P`` through ``x``."""
    if not r > 0:
        raise ValueError("r must be positive")
    cx = _as_cp(curve, x)
    px = curve.point(cx)
    pieces = [q for e in curve.edges for q in _clip_to_disk(e, px, r)]
    if not pieces:
        return ConstantReport("delta_linear", 0.0, (tuple(cx), r), r, 0)

    def f(th):
        return _max_line_dev(pieces, px, Point(math.cos(th), math.sin(th)))

    dirs = [math.pi * k / grid for k in range(grid)]
    for e in pieces:
        for q in (e.start, e.end):
            if math.dist(q, px) > 0:
                dirs.append(math.atan2(q[1] - px[1], q[0] - px[0]) % math.pi)
        if isinstance(e, Segment):
            dirs.append(math.atan2(e.b[1] - e.a[1], e.b[0] - e.a[0]) % math.pi)
    vals = [(f(t), t) for t in dirs]
    vals.sort()
    best = vals[0][0]
    h = math.pi / grid
    for _, t0 in vals[:8]:
        v, _ = _golden_max(lambda t: -f(t), t0 - h, t0 + h, iters)
        best = min(best, -v)
    return ConstantReport("delta_linear", best / r, (tuple(cx), r), r, len(dirs), True, grid)
