"""Verification suites for the level Jordan, quasicircle and chord-arc properties."""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

import numpy as np

from .constants import (DEFAULT_SAMPLER, Sampler, chord_arc_constant, delta_linear, two_point_constant,
                        zeta_sup)
from .curve import JordanCurve, Subarc
from .distance import nearest_points
from .geom import CircularArc
from .levelset import (LevelSetResult, eps_boundary_of_set, level_set_exact,
                       level_subset_for_subarc)

PASS, FAIL = "pass", "fail"


@dataclass
class VerificationReport:
    suite: str
    curve_id: str
    eps_schedule: list
    outcomes: list = field(default_factory=list)
    verdict: str = PASS
    witness: dict | None = None
    summary: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def fail(self, **witness):
        if self.verdict == PASS:
            self.verdict = FAIL
            self.witness = witness

    def lines(self) -> list[str]:
        out = [f"SUITE {self.suite}", f"CURVE {self.curve_id}"]
        out.append("SCHEDULE " + " ".join(f"{e:.12g}" for e in self.eps_schedule))
        for k, v in self.summary.items():
            out.append(f"SUMMARY {k}={_fmt(v)}")
        for rec in self.outcomes:
            out.append("EPS " + " ".join(f"{k}={_fmt(v)}" for k, v in rec.items()))
        if self.passed:
            out.append("VERDICT pass")
        else:
            w = " ".join(f"{k}={_fmt(v)}" for k, v in (self.witness or {}).items())
            out.append(f"VERDICT fail {w}".rstrip())
        return out


def _fmt(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (float, np.floating)):
        return f"{float(v):.9g}"
    if isinstance(v, (tuple, list)):
        return "(" + ",".join(_fmt(x) for x in v) + ")"
    return str(v)


# ------------------------------------------------------------------ schedules


def default_schedule(curve: JordanCurve, kmin: int = 3, kmax: int = 10) -> list[float]:
    """``diam * 2^-k`` for ``k = kmin..kmax``, each with both signs."""
    out = []
    for k in range(kmin, kmax + 1):
        e = curve.diameter * 2.0 ** -k
        out += [e, -e]
    return out


def arc_radius_scales(curve: JordanCurve, below: float) -> list[float]:
    """Signed ``eps`` at which an arc offset degenerates to its centre."""
    out = set()
    for e in curve.edges:
        if isinstance(e, CircularArc) and e.radius < below:
            out.add(e.radius if e.sweep > 0 else -e.radius)
    return sorted(out, key=lambda x: (-abs(x), -x))


def _order(schedule):
    return sorted((float(e) for e in schedule), key=lambda x: (-abs(x), -x))


def _levels(curve, schedule, cache):
    for eps in schedule:
        if eps not in cache:
            cache[eps] = level_set_exact(curve, eps)
        yield eps, cache[eps]


# ------------------------------------------------------------------ suites


def verify_ljc(curve: JordanCurve, eps_schedule=None, curve_id: str = "curve",
               _cache: dict | None = None) -> VerificationReport:
    """Pass iff every scheduled level set is a single Jordan curve."""
    sched = _order(eps_schedule if eps_schedule is not None else default_schedule(curve))
    cache = {} if _cache is None else _cache
    rep = VerificationReport("ljc", curve_id, sched)
    for eps, res in _levels(curve, sched, cache):
        rec = {"eps": eps, "class": res.label(), "chains": len(res.chains)}
        rep.outcomes.append(rec)
        if not res.is_jordan:
            pts = res.branch_points or res.isolated_points
            rep.fail(eps=eps, cls=res.label(), point=tuple(pts[0]) if pts else "none")
    return rep


def _trend_failure(per_eps, ratio=1.2, window=3):
    """Finest ``window`` scales of one sign whose constants grow by ``ratio`` each step."""
    for sign in (1, -1):
        vals = [(abs(e), c) for e, c in per_eps if (e > 0) == (sign > 0)]
        vals.sort(reverse=True)
        tail = vals[-window:]
        if len(tail) == window and all(b[1] >= ratio * a[1] for a, b in zip(tail, tail[1:])):
            return tail
    return None


def verify_lqc(curve: JordanCurve, eps_schedule=None, sampler: Sampler = DEFAULT_SAMPLER,
               bound: float | None = None, r0: float | None = None, curve_id: str = "curve",
               _cache: dict | None = None) -> VerificationReport:
    """2-point constants of every level set against a declared uniform bound.

    The default schedule also pins the radii of small arcs, where inner offsets
    degenerate into corners. Fails when any constant exceeds the bound or when
    the constants at the three finest scales of one sign keep growing by at
    least 20% per step.
    """
    if eps_schedule is None:
        base = default_schedule(curve)
        eps_schedule = base + arc_radius_scales(curve, max(abs(e) for e in base))
    sched = _order(eps_schedule)
    r0 = curve.diameter / 4 if r0 is None else r0
    zeta = zeta_sup(curve, r0, sampler).value
    if bound is None:
        bound = 4 * max(4 * zeta * zeta + 2 * zeta + 1, curve.diameter / r0)
    rep = VerificationReport("lqc", curve_id, sched, summary={"zeta": zeta, "r0": r0, "bound": bound})
    cache = {} if _cache is None else _cache
    per = []
    for eps, res in _levels(curve, sched, cache):
        if not res.is_jordan:
            rep.outcomes.append({"eps": eps, "class": res.label()})
            rep.fail(eps=eps, cls=res.label(), reason="not_jordan")
            continue
        c = two_point_constant(res.chains[0].as_curve(), sampler).value
        per.append((eps, c))
        rep.outcomes.append({"eps": eps, "class": res.label(), "two_point": c})
        if c > bound:
            rep.fail(eps=eps, two_point=c, bound=bound, reason="bound")
    tail = _trend_failure(per)
    if tail is not None:
        rep.fail(eps=tail[-1][0], two_point=tail[-1][1], reason="growing",
                 trend=tuple(c for _, c in tail))
    rep.summary["max_two_point"] = max((c for _, c in per), default=float("nan"))
    return rep


def verify_lca(curve: JordanCurve, eps_schedule=None, sampler: Sampler = DEFAULT_SAMPLER,
               bound: float = 3.0, curve_id: str = "curve", _cache: dict | None = None) -> VerificationReport:
    """Chord-arc constants of the curve and of every level set against ``bound``.

    Also checks ``two_point <= chord_arc`` per level, so a pass here implies
    the level sets satisfy any 2-point bound that is at least ``bound``.
    """
    sched = _order(eps_schedule if eps_schedule is not None else default_schedule(curve))
    base = chord_arc_constant(curve, sampler).value
    rep = VerificationReport("lca", curve_id, sched, summary={"curve_chord_arc": base, "bound": bound})
    if base > bound:
        rep.fail(eps=0.0, chord_arc=base, bound=bound, reason="curve")
    cache = {} if _cache is None else _cache
    for eps, res in _levels(curve, sched, cache):
        if not res.is_jordan:
            rep.outcomes.append({"eps": eps, "class": res.label()})
            rep.fail(eps=eps, cls=res.label(), reason="not_jordan")
            continue
        lc = res.chains[0].as_curve()
        ca = chord_arc_constant(lc, sampler).value
        tp = two_point_constant(lc, sampler).value
        rep.outcomes.append({"eps": eps, "class": res.label(), "chord_arc": ca, "two_point": tp})
        if ca > bound:
            rep.fail(eps=eps, chord_arc=ca, bound=bound, reason="bound")
        if tp > ca + 1e-9:
            rep.fail(eps=eps, two_point=tp, chord_arc=ca, reason="inconsistent")
    return rep


def prop_bound(zeta: float, diameter: float, r0: float) -> float:
    return max(4 * zeta * zeta + 2 * zeta + 1, diameter / r0)


def verify_bounds(curve: JordanCurve, r0: float, sampler: Sampler = DEFAULT_SAMPLER,
                  tolerance: float = 1e-6, curve_id: str = "curve") -> VerificationReport:
    """Measured 2-point constant against ``max{4z^2 + 2z + 1, diam / r0}``."""
    if not r0 > 0:
        raise ValueError("r0 must be positive")
    z = zeta_sup(curve, r0, sampler)
    c = two_point_constant(curve, sampler)
    b = prop_bound(z.value, curve.diameter, r0)
    # reverse direction has no explicit constant: log the linear-approximation value only
    L = curve.length
    delta = max(delta_linear(curve, L * k / 8, r0 / 4, grid=180).value for k in range(8))
    rep = VerificationReport("bounds", curve_id, [],
                             summary={"r0": r0, "zeta": z.value, "two_point": c.value, "bound": b,
                                      "delta_monitor": delta})
    if c.value > b + tolerance:
        rep.fail(two_point=c.value, bound=b, witness=c.witness)
    return rep


# --------------------------------------------------------------- local lemmas


def circle_runs(res: LevelSetResult):
    """Total length of each maximal run of chain pieces generated by one vertex alone."""
    runs = []
    for ch in res.chains:
        gens = ch.generators
        n = len(ch.pieces)
        keys = [next(iter(g)) if len(g) == 1 and next(iter(g))[0] == "v" else None for g in gens]
        if not any(k is not None for k in keys):
            continue
        start = 0
        if ch.closed and keys[0] is not None and len(set(keys)) > 1:
            while keys[start] == keys[start - 1]:
                start += 1
        order = list(range(start, n)) + list(range(start))
        cur, total = None, 0.0
        for k in order:
            if keys[k] is not None and keys[k] == cur:
                total += ch.pieces[k].length
            else:
                if cur is not None:
                    runs.append((cur, total))
                cur, total = keys[k], ch.pieces[k].length
        if cur is not None:
            runs.append((cur, total))
    return runs


def chain_samples(res: LevelSetResult, per_chain: int = 48):
    pts = []
    for ch in res.chains:
        sp = max(ch.length / per_chain, 1e-12)
        pts.extend(map(tuple, ch.sample(sp)))
        pts.extend(p.start for p in ch.pieces)
    return pts


def branch_point_defects(curve: JordanCurve, res: LevelSetResult):
    """For every branch point: ``(point, n_nearest, |angle between nearest points - pi|)``."""
    out = []
    for b in res.branch_points:
        nps = nearest_points(curve, b)
        if len(nps.locations) != 2:
            out.append((b, len(nps.locations), math.inf))
            continue
        (x1, y1), (x2, y2) = nps.locations
        a = math.atan2(y1 - b[1], x1 - b[0]) - math.atan2(y2 - b[1], x2 - b[0])
        a = abs((a + math.pi) % (2 * math.pi) - math.pi)
        out.append((b, 2, abs(math.pi - a)))
    return out


def four_points_violations(res: LevelSetResult, eps: float, per_chain: int = 16, steps: int = 256):
    """Sampled check: small circles about chain points cross the local chain twice."""
    bad = []
    delta = abs(eps) / 8
    window = np.linspace(-4 * delta, 4 * delta, steps + 1)
    for ch in res.chains:
        if not ch.closed or ch.length < 8 * delta:
            continue
        for s0 in np.arange(per_chain) * (ch.length / per_chain):
            P = ch.points_at(s0 + window)
            c = P[steps // 2]
            out = np.hypot(P[:, 0] - c[0], P[:, 1] - c[1]) > delta
            crossings = int(np.count_nonzero(out[1:] != out[:-1]))
            if crossings > 2:
                bad.append((tuple(c), crossings))
    return bad


def _subarc_around(curve, s_mid, half_len):
    a = curve.at_s(s_mid - half_len)
    b = curve.at_s(s_mid + half_len)
    return Subarc(curve, a, b, "forward")


def _subarc_with_diameter(curve, s_mid, target):
    """Subarc centred at ``s_mid`` whose diameter is close to ``target``."""
    lo, hi = 0.0, curve.length / 4
    lam = _subarc_around(curve, s_mid, hi)
    if lam.diameter <= target:
        return lam
    for _ in range(40):
        mid = 0.5 * (lo + hi)
        if _subarc_around(curve, s_mid, mid).diameter > target:
            hi = mid
        else:
            lo = mid
    return _subarc_around(curve, s_mid, max(lo, 1e-12))


def verify_local_lemmas(curve: JordanCurve, eps_schedule=None, seed: int = 0,
                        n_subarcs: int = 3, curve_id: str = "curve",
                        sampler: Sampler = Sampler(net=256, max_points=800),
                        _cache: dict | None = None) -> VerificationReport:
    """Circle-run length, semicircle, subarc connectivity, epsilon-boundary and crossing checks."""
    sched = _order(eps_schedule if eps_schedule is not None else default_schedule(curve))
    rng = random.Random(seed)
    rep = VerificationReport("lemmas", curve_id, sched)
    cache = {} if _cache is None else _cache
    verts = curve.cumulative[:-1]
    for eps, res in _levels(curve, sched, cache):
        d = abs(eps)
        rec = {"eps": eps, "class": res.label()}
        runs = circle_runs(res)
        worst_run = max((t for _, t in runs), default=0.0)
        rec["circle_run"] = worst_run
        if worst_run > math.pi * d + 1e-9:
            rep.fail(eps=eps, lemma="circle_run", length=worst_run, limit=math.pi * d)
        span = 0.0
        for q in chain_samples(res):
            sp = nearest_points(curve, q).angular_span()
            if sp > span:
                span = sp
                if sp > math.pi + 1e-6:
                    rep.fail(eps=eps, lemma="semicircle", point=q, span=sp)
        rec["max_span"] = span
        if res.is_jordan:
            worst = 0
            for _ in range(n_subarcs):
                s0 = rng.uniform(0, curve.length)
                lam = _subarc_around(curve, s0, rng.uniform(0.02, 0.4) * curve.length / 2)
                k = len(level_subset_for_subarc(curve, lam, eps, res))
                worst = max(worst, k)
                if k > 1:
                    rep.fail(eps=eps, lemma="subarc", chains=k, s=s0)
            rec["subarc_chains"] = worst
        bad = four_points_violations(res, eps)
        rec["four_points"] = len(bad)
        if bad:
            rep.fail(eps=eps, lemma="four_points", point=bad[0][0], crossings=bad[0][1])
        for b, n, defect in branch_point_defects(curve, res):
            if n != 2 or defect > 1e-6:
                rep.fail(eps=eps, lemma="branch", point=tuple(b), nearest=n, defect=defect)
        # epsilon-boundary of a small subarc around a random vertex
        v = float(verts[rng.randrange(len(verts))])
        lam = _subarc_with_diameter(curve, v, d / 4)
        if lam.diameter > 0 and d > 3 * lam.diameter:
            eb = eps_boundary_of_set(lam, d, tol=curve.tol)
            if not eb.is_jordan:
                rep.fail(eps=eps, lemma="eps_boundary", cls=eb.label())
            else:
                ca = chord_arc_constant(eb.chains[0].as_curve(), sampler).value
                rec["eps_boundary_chord_arc"] = ca
                if ca > 10:
                    rep.fail(eps=eps, lemma="eps_boundary", chord_arc=ca)
        rep.outcomes.append(rec)
    return rep
