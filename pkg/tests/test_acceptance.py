"""Acceptance criteria, one test per criterion."""
import math
import time

from jordanlevels.cli import main as cli_main
from jordanlevels.constants import Sampler, chord_arc_constant, two_point_constant, zeta_pair, zeta_sup
from jordanlevels.curve import subarc_smaller_diameter
from jordanlevels.distance import signed_distance
from jordanlevels.geom import CircularArc, Segment
from jordanlevels.generators import (SnowflakeSpec, circle_curve, dumbbell, regular_ngon, rohde_snowflake,
                                     sharplqc_curve, sharplqc_params, staircase_sharpljc, staircase_tooth)
from jordanlevels.io import write_curve
from jordanlevels.levelset import (NON_MANIFOLD, exact_vs_grid_hausdorff, level_set_exact, level_set_grid,
                                   level_subset_for_subarc)
from jordanlevels.verify import (branch_point_defects, default_schedule, verify_bounds, verify_ljc,
                                 verify_local_lemmas)
from jordanlevels.constants import _as_cp

SNOW_DEPTHS = (1, 2, 3)


def snowflake(depth):
    return rohde_snowflake(SnowflakeSpec(6, 0.26, depth, "all_bump", 0))


# branch points seen anywhere in this module, checked by criterion 10
BRANCHES = []


def test_c01_staircase_chordal_values(criterion):
    t0 = time.perf_counter()
    c = staircase_sharpljc(8)
    errs = []
    for n in range(1, 7):
        x, y, _ = staircase_tooth(n)
        errs.append(abs(zeta_pair(c, x, y) - (0.5 + 2.0 ** -n)))
    dt = time.perf_counter() - t0
    ok = max(errs) <= 1e-12 and dt < 1.0
    criterion(1, ok, f"max_err={max(errs):.3g} time={dt:.2f}s")
    assert ok


def test_c02_staircase_branch_points(criterion):
    t0 = time.perf_counter()
    c = staircase_sharpljc(8)
    worst, census_ok = 0.0, True
    for n in range(2, 6):
        eps = 2.0 ** (-n - 3)
        res = level_set_exact(c, eps)
        assert res.classification == NON_MANIFOLD
        BRANCHES.append((c, res))
        target = (2.0 ** -n - 2.0 ** (-n - 3), 0.0)
        worst = max(worst, min(math.dist(b, target) for b in res.branch_points))
        x, y, _ = staircase_tooth(n)
        lam = subarc_smaller_diameter(c, _as_cp(c, x), _as_cp(c, y))
        chains = level_subset_for_subarc(c, lam, eps, res)
        kinds = sorted(k for ch in chains for k in ch.kinds())
        census_ok &= kinds == ["A", "A", "S"]
        # midline of height 2^(-2n-2) plus two quarter circles of radius eps
        segs = [e for ch in chains for e in ch.pieces if isinstance(e, Segment)]
        arcs = [e for ch in chains for e in ch.pieces if isinstance(e, CircularArc)]
        census_ok &= all(abs(s.length - 2.0 ** (-2 * n - 2)) < 1e-12 for s in segs)
        census_ok &= all(abs(abs(a.sweep) - math.pi / 2) < 1e-9 and abs(a.radius - eps) < 1e-12 for a in arcs)
    dt = time.perf_counter() - t0
    ok = worst <= 1e-9 and census_ok and dt < 5.0
    criterion(2, ok, f"branch_err={worst:.3g} census={census_ok} time={dt:.2f}s")
    assert ok


def _ljc_configs():
    # r0 chosen so that the measured chordal constant stays at or below 1/2
    yield "square", regular_ngon(4), 1.0
    yield "hexagon", regular_ngon(6), 1.0
    yield "dumbbell(0.5)", dumbbell(0.5), 0.45
    for d in SNOW_DEPTHS:
        s = snowflake(d)
        yield f"snowflake(d={d})", s, s.diameter / 8


def test_c03_ljc_regression(criterion):
    t0 = time.perf_counter()
    bad = []
    sampler = Sampler(net=512, max_points=1500)
    for name, c, r0 in _ljc_configs():
        z = zeta_sup(c, r0, sampler).value
        if z > 0.5 + 1e-9:
            bad.append(f"{name}:zeta={z:.4f}")
            continue
        sched = [e for e in default_schedule(c) if abs(e) < r0 / 2]
        rep = verify_ljc(c, sched, curve_id=name)
        if not rep.passed or not sched:
            bad.append(f"{name}:{rep.witness}")
    dt = time.perf_counter() - t0
    ok = not bad and dt < 60.0
    criterion(3, ok, f"failures={bad or 'none'} time={dt:.1f}s")
    assert ok


def test_c04_prop_bound(criterion):
    configs = [("square", regular_ngon(4), 1.0, 3.0), ("hexagon", regular_ngon(6), 1.2, 1.92),
               ("circle", circle_curve(1.0), 0.5, None)]
    configs += [(f"snowflake(d={d})", snowflake(d), 0.25, None) for d in SNOW_DEPTHS]
    parts, ok = [], True
    for name, c, r0, cap in configs:
        rep = verify_bounds(c, r0, tolerance=1e-6, curve_id=name)
        s = rep.summary
        good = rep.passed and (cap is None or s["bound"] <= cap + 1e-6)
        ok &= good
        parts.append(f"{name}:C={s['two_point']:.4f}<={s['bound']:.4f}")
    criterion(4, ok, " ".join(parts))
    assert ok


def _oracle_cases():
    yield "square", regular_ngon(4), (0.05, 0.1, 0.25, -0.05, -0.1, -0.2)
    yield "circle", circle_curve(1.0), (0.1, 0.3, 0.6, -0.1, -0.3, -0.6)
    yield "hexagon", regular_ngon(6), (0.05, 0.2, 0.5, -0.05, -0.2, -0.4)
    yield "dumbbell(0.2)", dumbbell(0.2), (0.05, 0.15, 0.3, -0.05, -0.15, -0.3)


def test_c05_exact_vs_grid(criterion):
    t0 = time.perf_counter()
    worst, where = 0.0, ""
    for name, c, epss in _oracle_cases():
        for eps in epss:
            h = abs(eps) / 16
            res = level_set_exact(c, eps)
            d = exact_vs_grid_hausdorff(res, level_set_grid(c, eps, h), h)
            if d / h > worst:
                worst, where = d / h, f"{name}@{eps}"
    dt = time.perf_counter() - t0
    ok = worst <= 2.0 and dt < 120.0
    criterion(5, ok, f"max_hausdorff/h={worst:.3f} ({where}) time={dt:.1f}s")
    assert ok


def test_c06_convex_offset_lengths(criterion):
    sq = regular_ngon(4)
    errs = []
    for e in (0.1, 0.25, 0.5):
        errs.append(abs(level_set_exact(sq, -e).length - (4 + 2 * math.pi * e)))
    for e in (0.1, 0.25, 0.4):
        errs.append(abs(level_set_exact(sq, e).length - 4 * (1 - 2 * e)))
    ok = max(errs) <= 1e-9
    criterion(6, ok, f"max_err={max(errs):.3g}")
    assert ok


def test_c07_constant_witnesses(criterion):
    circ, sq, hexa = circle_curve(1.0), regular_ngon(4), regular_ngon(6)
    vals = {
        "circle_two_point": (two_point_constant(circ).value, 1.0, 1e-6),
        "circle_chord_arc": (chord_arc_constant(circ).value, math.pi / 2, 1e-3),
        "square_chord_arc": (chord_arc_constant(sq).value, 2.0, 1e-3),
        "hexagon_zeta": (zeta_sup(hexa, 1.0).value, 1 / (2 * math.sqrt(3)), 1e-6),
    }
    ok = all(abs(v - t) <= tol for v, t, tol in vals.values())
    criterion(7, ok, " ".join(f"{k}={v:.7f}" for k, (v, _, _) in vals.items()))
    assert ok


def test_c08_sharplqc_trend(criterion, tmp_path):
    c = sharplqc_curve(24, 4)
    cs = []
    for n in range(1, 5):
        eps = sharplqc_params(n)[1]
        res = level_set_exact(c, eps)
        assert res.is_jordan
        cs.append(two_point_constant(res.chains[0].as_curve()).value)
    growing = all(b >= 1.2 * a for a, b in zip(cs, cs[1:]))
    path = tmp_path / "sharplqc.curve"
    write_curve(c, path)
    code = cli_main(["verify", "lqc", "-i", str(path)])
    ok = growing and code == 1
    criterion(8, ok, "K_n=" + ",".join(f"{v:.3f}" for v in cs) + f" exit={code}")
    assert ok


def test_c09_lemma_suites(criterion):
    configs = [("square", regular_ngon(4)), ("hexagon", regular_ngon(6)), ("dumbbell(0.5)", dumbbell(0.5))]
    configs += [(f"snowflake(d={d})", snowflake(d)) for d in SNOW_DEPTHS]
    bad = []
    for name, c in configs:
        rep = verify_local_lemmas(c, curve_id=name)
        if not rep.passed:
            bad.append(f"{name}:{rep.witness}")
    ok = not bad
    criterion(9, ok, f"failures={bad or 'none'}")
    assert ok


def test_c10_branch_points_antipodal(criterion):
    if not BRANCHES:
        c = staircase_sharpljc(8)
        BRANCHES.extend((c, level_set_exact(c, 2.0 ** (-n - 3))) for n in range(2, 6))
    c = staircase_sharpljc(8)
    # also scan a ladder around the tangencies and the dumbbell neck
    for eps in (2.0 ** -4, 2.0 ** -3, 3 * 2.0 ** -6):
        BRANCHES.append((c, level_set_exact(c, eps)))
    db = dumbbell(0.2)
    BRANCHES.append((db, level_set_exact(db, 0.1)))
    count, worst, bad = 0, 0.0, 0
    for curve, res in BRANCHES:
        for b, n, defect in branch_point_defects(curve, res):
            count += 1
            worst = max(worst, defect)
            bad += n != 2 or defect > 1e-6
            assert abs(abs(signed_distance(curve, b)) - abs(res.epsilon)) < 1e-9
    ok = count > 0 and bad == 0
    criterion(10, ok, f"branch_points={count} max_defect={worst:.3g}")
    assert ok
