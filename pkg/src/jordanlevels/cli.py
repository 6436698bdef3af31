"""Command line interface.

Exit status: 0 on success, 1 when a verification fails, 2 on usage or input errors.
"""
from __future__ import annotations

import argparse
import sys

from . import generators as G
from .constants import Sampler, chord_arc_constant, two_point_constant, zeta_sup
from .curve import CurveError
from .io import FormatError, format_curve, format_levelset, format_record, read_curve
from .levelset import (EMPTY, JORDAN, MULTIPLE, NON_MANIFOLD, Chain, LevelSetError,
                       LevelSetResult, level_set_exact, level_set_grid)
from .geom import Point, Segment
from .render import render_svg
from .verify import (verify_bounds, verify_lca, verify_local_lemmas, verify_ljc, verify_lqc)


def _emit(text: str, path):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _eps_list(values):
    out = []
    for v in values or []:
        out += [float(x) for x in str(v).split(",") if x.strip()]
    return out


def _sampler(args):
    n = getattr(args, "samples", None)
    return Sampler(net=n) if n else Sampler()


# ------------------------------------------------------------------ commands


def cmd_gen(args):
    k = args.kind
    if k == "square":
        c = G.regular_ngon(4, args.side)
    elif k == "hexagon":
        c = G.regular_ngon(6, args.side)
    elif k == "ngon":
        c = G.regular_ngon(args.n, args.side)
    elif k == "circle":
        c = G.circle_curve(args.r)
    elif k == "staircase":
        c = G.staircase_sharpljc(args.teeth)
    elif k == "sharplqc":
        c = G.sharplqc_curve(args.n if args.n is not None else 24, args.n_max)
    elif k == "snowflake":
        spec = G.SnowflakeSpec(args.n if args.n is not None else 6, args.p, args.depth, args.rule, args.seed)
        c = G.rohde_snowflake(spec)
    else:
        c = G.dumbbell(args.neck)
    _emit(format_curve(c), args.output)
    return 0


def _grid_result(curve, eps, h):
    lines = level_set_grid(curve, eps, h)
    chains = []
    for pts, closed in lines:
        P = [Point(float(x), float(y)) for x, y in pts]
        if closed:
            P.append(P[0])
        segs = [Segment(a, b) for a, b in zip(P, P[1:]) if a != b]
        if segs:
            chains.append(Chain(segs, closed))
    if not chains:
        return LevelSetResult(eps, [], EMPTY)
    if len(chains) == 1 and chains[0].closed:
        return LevelSetResult(eps, chains, JORDAN, 1)
    return LevelSetResult(eps, chains, MULTIPLE, len(chains))


def cmd_levelset(args):
    curve = read_curve(args.input)
    if args.method == "grid":
        h = args.h if args.h else abs(args.eps) / 16
        res = _grid_result(curve, args.eps, h)
    else:
        res = level_set_exact(curve, args.eps)
    _emit(format_levelset(res), args.output)
    return 0


def classify_line(res: LevelSetResult) -> str:
    if res.classification == NON_MANIFOLD:
        coords = ",".join(f"{v:.6f}" for b in res.branch_points for v in b)
        return f"NONMANIFOLD({coords})"
    if res.classification == JORDAN:
        return "JORDAN"
    if res.classification == EMPTY:
        return "EMPTY"
    return f"COMPONENTS={res.count}"


def cmd_classify(args):
    res = level_set_exact(read_curve(args.input), args.eps)
    print(classify_line(res))
    return 0


def _report(rep):
    print(format_record(rep.as_record()))
    return 0


def cmd_zeta(args):
    c = read_curve(args.input)
    return _report(zeta_sup(c, args.r0, _sampler(args)))


def cmd_twopoint(args):
    return _report(two_point_constant(read_curve(args.input), _sampler(args)))


def cmd_chordarc(args):
    return _report(chord_arc_constant(read_curve(args.input), _sampler(args)))


def cmd_verify(args):
    c = read_curve(args.input)
    sched = _eps_list(args.eps_list) or None
    cid = args.input
    s = args.suite
    if s == "ljc":
        rep = verify_ljc(c, sched, curve_id=cid)
    elif s == "lqc":
        rep = verify_lqc(c, sched, _sampler(args), bound=args.bound, r0=args.r0, curve_id=cid)
    elif s == "lca":
        rep = verify_lca(c, sched, _sampler(args), bound=args.bound or 3.0, curve_id=cid)
    elif s == "bounds":
        rep = verify_bounds(c, args.r0 or c.diameter / 4, _sampler(args), curve_id=cid)
    else:
        rep = verify_local_lemmas(c, sched, curve_id=cid)
    print("\n".join(rep.lines()))
    return 0 if rep.passed else 1


def cmd_render(args):
    c = read_curve(args.input)
    levels = [level_set_exact(c, e) for e in _eps_list(args.eps)]
    _emit(render_svg(c, levels), args.output)
    return 0


# -------------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="jordanlevels",
                                description="Level sets of the signed distance to planar Jordan curves.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="write a generated curve")
    g.add_argument("kind", choices=["square", "hexagon", "ngon", "circle", "staircase", "sharplqc",
                                    "snowflake", "dumbbell"])
    g.add_argument("--n", type=int, default=None, help="polygon sides (ngon, sharplqc, snowflake)")
    g.add_argument("--side", type=float, default=1.0)
    g.add_argument("--r", type=float, default=1.0)
    g.add_argument("--teeth", type=int, default=6)
    g.add_argument("--n-max", type=int, default=4)
    g.add_argument("--p", type=float, default=0.26)
    g.add_argument("--depth", type=int, default=3)
    g.add_argument("--rule", default="all_bump", choices=list(G.CHOICE_RULES))
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--neck", type=float, default=0.2)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_gen)

    ls = sub.add_parser("levelset", help="compute a level set")
    ls.add_argument("-i", "--input", required=True)
    ls.add_argument("-e", "--eps", type=float, required=True)
    ls.add_argument("--method", choices=["exact", "grid"], default="exact")
    ls.add_argument("--h", type=float)
    ls.add_argument("-o", "--output")
    ls.set_defaults(func=cmd_levelset)

    cl = sub.add_parser("classify", help="classify a level set")
    cl.add_argument("-i", "--input", required=True)
    cl.add_argument("-e", "--eps", type=float, required=True)
    cl.set_defaults(func=cmd_classify)

    z = sub.add_parser("zeta", help="chordal constant")
    z.add_argument("-i", "--input", required=True)
    z.add_argument("--r0", type=float)
    z.add_argument("--samples", type=int)
    z.set_defaults(func=cmd_zeta)

    for name, fn in (("twopoint", cmd_twopoint), ("chordarc", cmd_chordarc)):
        q = sub.add_parser(name, help=f"{name} constant")
        q.add_argument("-i", "--input", required=True)
        q.add_argument("--samples", type=int)
        q.set_defaults(func=fn)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=["ljc", "lqc", "lca", "bounds", "lemmas"])
    v.add_argument("-i", "--input", required=True)
    v.add_argument("--eps-list", nargs="+")
    v.add_argument("--r0", type=float)
    v.add_argument("--bound", type=float)
    v.add_argument("--samples", type=int)
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("render", help="write an SVG")
    r.add_argument("-i", "--input", required=True)
    r.add_argument("-e", "--eps", action="append")
    r.add_argument("-o", "--output")
    r.set_defaults(func=cmd_render)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (FormatError, CurveError, LevelSetError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
