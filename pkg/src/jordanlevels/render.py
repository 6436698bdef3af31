"""SVG output: the curve in black, one path per level chain, branch points marked."""
from __future__ import annotations

import math
from xml.sax.saxutils import quoteattr

from .geom import Segment

PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf",
           "#8c564b", "#e377c2", "#bcbd22", "#7f7f7f")


def _f(v: float) -> str:
    s = f"{v:.10g}"
    return "0" if s == "-0" else s


def path_data(pieces, closed: bool) -> str:
    if not pieces:
        return ""
    p0 = pieces[0].start
    out = [f"M {_f(p0[0])} {_f(p0[1])}"]
    for e in pieces:
        if isinstance(e, Segment):
            out.append(f"L {_f(e.b[0])} {_f(e.b[1])}")
            continue
        k = max(1, math.ceil(abs(e.sweep) / math.pi - 1e-12))
        for i in range(k):
            sub = e.sub_piece(i / k, (i + 1) / k)
            q = sub.end
            large = 1 if abs(sub.sweep) > math.pi else 0
            sweep = 1 if sub.sweep > 0 else 0
            out.append(f"A {_f(e.radius)} {_f(e.radius)} 0 {large} {sweep} {_f(q[0])} {_f(q[1])}")
    if closed:
        out.append("Z")
    return " ".join(out)


def render_svg(curve, levels=(), width: int = 800, margin: float = 0.05) -> str:
    """SVG document for ``curve`` and a sequence of level-set results."""
    x0, y0, x1, y1 = curve.bbox
    for res in levels:
        for ch in res.chains:
            for e in ch.pieces:
                bx0, by0, bx1, by1 = e.bbox()
                x0, y0, x1, y1 = min(x0, bx0), min(y0, by0), max(x1, bx1), max(y1, by1)
    span = max(x1 - x0, y1 - y0) or 1.0
    pad = margin * span
    x0, y0, x1, y1 = x0 - pad, y0 - pad, x1 + pad, y1 + pad
    w, h = x1 - x0, y1 - y0
    height = max(1, round(width * h / w))
    stroke = span / 400
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="{_f(x0)} {_f(-y1)} {_f(w)} {_f(h)}">',
        '<g transform="scale(1,-1)" fill="none">',
        f'<path class="curve" stroke="#000000" stroke-width="{_f(stroke)}" '
        f'd={quoteattr(path_data(curve.edges, True))}/>',
    ]
    for k, res in enumerate(levels):
        color = PALETTE[k % len(PALETTE)]
        for ch in res.chains:
            lines.append(f'<path class="level" data-eps="{_f(res.epsilon)}" stroke="{color}" '
                         f'stroke-width="{_f(stroke)}" d={quoteattr(path_data(ch.pieces, ch.closed))}/>')
        for b in res.branch_points:
            lines.append(f'<circle class="branch" cx="{_f(b[0])}" cy="{_f(b[1])}" r="{_f(4 * stroke)}" '
                         f'fill="{color}"/>')
    lines += ["</g>", "</svg>"]
    return "\n".join(lines) + "\n"
