"""Kernel dispatch: compiled ``_core`` when importable, numpy fallback otherwise.

Set ``JORDANLEVELS_PURE=1`` to force the fallback.
"""
import math
import os

import numpy as np

from . import _fallback
from .geom import Segment

BACKEND = "python"
_impl = _fallback
if os.environ.get("JORDANLEVELS_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _core as _impl  # noqa: F811
        BACKEND = "compiled"
    except ImportError:  # pragma: no cover - depends on build
        _impl = _fallback


def use_backend(name):
    """Switch backends at runtime ("compiled" or "python"); returns the old name."""
    global _impl, BACKEND
    old = BACKEND
    if name == "python":
        _impl, BACKEND = _fallback, "python"
    elif name == "compiled":
        from . import _core
        _impl, BACKEND = _core, "compiled"
    else:
        raise ValueError(name)
    return old


def edge_table(edges):
    """Pack edges into the (n, 10) kernel table, splitting arcs into quarter turns."""
    rows = []
    for e in edges:
        if isinstance(e, Segment):
            rows.append((0.0, e.a[0], e.a[1], e.b[0], e.b[1], 0.0, 0.0, 0.0, 0.0, 0.0))
            continue
        k = max(1, math.ceil(abs(e.sweep) / (math.pi / 2) - 1e-12))
        for i in range(k):
            piece = e.sub_piece(i / k, (i + 1) / k)
            a, b = piece.start, piece.end
            rows.append((1.0, a[0], a[1], b[0], b[1], e.center[0], e.center[1],
                         e.radius, piece.start_angle, piece.sweep))
    return np.array(rows, dtype=np.float64).reshape(-1, 10)


def min_distance(px, py, table):
    return _impl.min_distance(px, py, table)


def winding(px, py, table):
    return _impl.winding(px, py, table)


def zeta_scan(xs, ys, s, feat_next, diam, r0, total_len, tol):
    return _impl.zeta_scan(xs, ys, s, feat_next, diam, float(r0), float(total_len), float(tol))
