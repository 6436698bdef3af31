"""Text formats for curves, grids, level sets and reports.

Floats are written with ``repr`` so that dyadic constructions round-trip
bit for bit.
"""
from __future__ import annotations

import math
from pathlib import Path

import numpy as np

from .curve import JordanCurve, checked
from .distance import ScalarGrid
from .geom import CircularArc, Point, Segment
from .levelset import Chain, LevelSetResult


class FormatError(ValueError):
    def __init__(self, message, line=None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


def _num(tok, lineno):
    try:
        v = float(tok)
    except ValueError:
        raise FormatError(f"bad number {tok!r}", lineno) from None
    if not math.isfinite(v):
        raise FormatError(f"non-finite number {tok!r}", lineno)
    return v


def _clean(lines):
    for k, raw in enumerate(lines, 1):
        s = raw.split("#", 1)[0].strip()
        if s:
            yield k, s.split()


def format_edge(e) -> str:
    if isinstance(e, Segment):
        return f"S {e.a[0]!r} {e.a[1]!r} {e.b[0]!r} {e.b[1]!r}"
    d = "+" if e.sweep > 0 else "-"
    return f"A {e.center[0]!r} {e.center[1]!r} {e.radius!r} {e.start_angle!r} {e.end_angle!r} {d}"


def _parse_edge(tok, lineno):
    if tok[0] == "S":
        if len(tok) != 5:
            raise FormatError("segment needs 4 numbers", lineno)
        x1, y1, x2, y2 = (_num(t, lineno) for t in tok[1:])
        return Segment(Point(x1, y1), Point(x2, y2))
    if tok[0] == "A":
        if len(tok) != 7 or tok[6] not in ("+", "-"):
            raise FormatError("arc needs cx cy r a0 a1 and a direction + or -", lineno)
        cx, cy, r, a0, a1 = (_num(t, lineno) for t in tok[1:6])
        if not r > 0:
            raise FormatError("arc radius must be positive", lineno)
        sweep = a1 - a0
        if (sweep > 0) != (tok[6] == "+") or sweep == 0:
            return CircularArc.from_angles(Point(cx, cy), r, a0, a1, ccw=tok[6] == "+")
        return CircularArc(Point(cx, cy), r, a0, sweep)
    raise FormatError(f"unknown record {tok[0]!r}", lineno)


def _curve_block(items, start):
    """Parse edges from ``items[start:]`` up to END; returns ``(edges, flags, next_index)``."""
    edges, flags = [], set()
    k = start
    while k < len(items):
        lineno, tok = items[k]
        k += 1
        if tok[0] == "END":
            return edges, flags, k
        if tok[0] == "ORIENT":
            if len(tok) != 2 or tok[1] not in ("ccw", "cw"):
                raise FormatError("ORIENT must be ccw or cw", lineno)
            flags.add(tok[1])
            continue
        if tok[0] == "OPEN":
            flags.add("open")
            continue
        edges.append(_parse_edge(tok, lineno))
    raise FormatError("missing END")


def parse_curve(text: str, check: bool = True) -> JordanCurve:
    items = list(_clean(text.splitlines()))
    if not items or items[0][1][:2] != ["CURVE", "v1"]:
        raise FormatError("expected header 'CURVE v1'", items[0][0] if items else 1)
    edges, flags, nxt = _curve_block(items, 1)
    if nxt != len(items):
        raise FormatError("content after END", items[nxt][0])
    if not edges:
        raise FormatError("curve has no edges")
    if check:
        return checked(edges, auto_reverse=True)
    return JordanCurve(edges)


def format_curve(curve: JordanCurve) -> str:
    lines = ["CURVE v1", "ORIENT ccw" if curve.signed_area > 0 else "ORIENT cw"]
    lines += [format_edge(e) for e in curve.edges]
    lines.append("END")
    return "\n".join(lines) + "\n"


def read_curve(path, check: bool = True) -> JordanCurve:
    return parse_curve(Path(path).read_text(), check)


def write_curve(curve: JordanCurve, path) -> None:
    Path(path).write_text(format_curve(curve))


# ---------------------------------------------------------------------- grids


def format_grid(g: ScalarGrid) -> str:
    lines = [f"GRID v1 {g.origin[0]!r} {g.origin[1]!r} {g.h!r} {g.nx} {g.ny}"]
    for row in g.values:
        lines.append(" ".join(repr(float(v)) for v in row))
    return "\n".join(lines) + "\n"


def parse_grid(text: str) -> ScalarGrid:
    items = list(_clean(text.splitlines()))
    if not items or items[0][1][:2] != ["GRID", "v1"] or len(items[0][1]) != 7:
        raise FormatError("expected header 'GRID v1 ox oy h nx ny'", items[0][0] if items else 1)
    ln, tok = items[0]
    ox, oy, h = (_num(t, ln) for t in tok[2:5])
    try:
        nx, ny = int(tok[5]), int(tok[6])
    except ValueError:
        raise FormatError("grid counts must be integers", ln) from None
    rows = items[1:]
    if len(rows) != ny:
        raise FormatError(f"expected {ny} rows, found {len(rows)}")
    vals = np.empty((ny, nx))
    for j, (ln, tok) in enumerate(rows):
        if len(tok) != nx:
            raise FormatError(f"expected {nx} values, found {len(tok)}", ln)
        vals[j] = [_num(t, ln) for t in tok]
    return ScalarGrid(Point(ox, oy), h, nx, ny, vals)


def read_grid(path) -> ScalarGrid:
    return parse_grid(Path(path).read_text())


def write_grid(g: ScalarGrid, path) -> None:
    Path(path).write_text(format_grid(g))


# ----------------------------------------------------------------- level sets


def format_levelset(res: LevelSetResult) -> str:
    lines = [f"LEVELSET v1 {res.epsilon!r} {res.label()}"]
    for b in res.branch_points:
        lines.append(f"BRANCH {float(b[0])!r} {float(b[1])!r}")
    for q in res.isolated_points:
        lines.append(f"ISOLATED {float(q[0])!r} {float(q[1])!r}")
    for ch in res.chains:
        lines.append("CURVE v1")
        if not ch.closed:
            lines.append("OPEN")
        lines += [format_edge(e) for e in ch.pieces]
        lines.append("END")
    return "\n".join(lines) + "\n"


def parse_levelset(text: str) -> LevelSetResult:
    items = list(_clean(text.splitlines()))
    if not items or items[0][1][:2] != ["LEVELSET", "v1"] or len(items[0][1]) != 4:
        raise FormatError("expected header 'LEVELSET v1 eps class'", items[0][0] if items else 1)
    ln, tok = items[0]
    eps = _num(tok[2], ln)
    label = tok[3]
    cls, count = label, 0
    if label.startswith("multiple_components(") and label.endswith(")"):
        cls, count = "multiple_components", int(label[len("multiple_components("):-1])
    res = LevelSetResult(eps, [], cls, count)
    k = 1
    while k < len(items):
        ln, tok = items[k]
        if tok[0] in ("BRANCH", "ISOLATED"):
            if len(tok) != 3:
                raise FormatError(f"{tok[0]} needs two numbers", ln)
            p = Point(_num(tok[1], ln), _num(tok[2], ln))
            (res.branch_points if tok[0] == "BRANCH" else res.isolated_points).append(p)
            k += 1
        elif tok[:2] == ["CURVE", "v1"]:
            edges, flags, k = _curve_block(items, k + 1)
            res.chains.append(Chain(edges, "open" not in flags))
        else:
            raise FormatError(f"unexpected record {tok[0]!r}", ln)
    if cls == "jordan_curve":
        res.count = 1
    return res


def write_levelset(res: LevelSetResult, path) -> None:
    Path(path).write_text(format_levelset(res))


def read_levelset(path) -> LevelSetResult:
    return parse_levelset(Path(path).read_text())


# -------------------------------------------------------------------- reports


def format_record(rec: dict) -> str:
    """Single-line ``key=value`` record."""
    return " ".join(f"{k}={v}" for k, v in rec.items())
