"""Numpy implementations of the hot kernels.

Used when the compiled ``_core`` extension is unavailable. Signatures and
results match ``_core`` to rounding.

Edge tables are float64 arrays of shape (n, 10) with columns
``kind, ax, ay, bx, by, cx, cy, r, a0, sweep``; kind 0 is a segment, kind 1
an arc of sweep at most pi/2 in magnitude.
"""
import numpy as np

TWO_PI = 2.0 * np.pi


def min_distance(px, py, table):
    px = np.asarray(px, dtype=float)
    py = np.asarray(py, dtype=float)
    best = np.full(px.shape, np.inf)
    for row in table:
        kind, ax, ay, bx, by, cx, cy, r, a0, sw = row
        if kind == 0:
            dx, dy = bx - ax, by - ay
            L2 = dx * dx + dy * dy
            t = ((px - ax) * dx + (py - ay) * dy) / L2
            t = np.clip(t, 0.0, 1.0)
            d = np.hypot(px - (ax + t * dx), py - (ay + t * dy))
        else:
            vx, vy = px - cx, py - cy
            rho = np.hypot(vx, vy)
            th = np.arctan2(vy, vx) - a0
            if sw < 0:
                th = -th
            th = np.mod(th, TWO_PI)
            on = th <= abs(sw)
            d_end = np.minimum(np.hypot(px - ax, py - ay), np.hypot(px - bx, py - by))
            d = np.where(on, np.abs(rho - r), d_end)
        np.minimum(best, d, out=best)
    return best


def winding(px, py, table):
    px = np.asarray(px, dtype=float)
    py = np.asarray(py, dtype=float)
    total = np.zeros(px.shape)
    for row in table:
        kind, ax, ay, bx, by, cx, cy, r, a0, sw = row
        ux, uy = ax - px, ay - py
        vx, vy = bx - px, by - py
        cr = ux * vy - uy * vx
        dt = ux * vx + uy * vy
        ang = np.arctan2(cr, dt)
        if kind == 1:
            inside = np.hypot(px - cx, py - cy) < r
            # same cross product as atan2 so side and angle sign agree
            side_c = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
            seg = inside & (cr * side_c < 0)
            ang = ang + np.where(seg, TWO_PI if sw > 0 else -TWO_PI, 0.0)
            on_chord = inside & (cr == 0) & (dt < 0)
            if on_chord.any():
                mx = cx + r * np.cos(a0 + 0.5 * sw) - px
                my = cy + r * np.sin(a0 + 0.5 * sw) - py
                split = (np.arctan2(ux * my - uy * mx, ux * mx + uy * my)
                         + np.arctan2(mx * vy - my * vx, mx * vx + my * vy))
                ang = np.where(on_chord, split, ang)
        total += ang
    return np.rint(total / TWO_PI).astype(np.int64)


def zeta_scan(xs, ys, s, feat_next, diam, r0, total_len, tol):
    """Best chordal ratio over sample pairs with chord at most ``r0``.

    ``diam[i, L]`` is the diameter of samples ``i .. i+L`` (cyclic).
    ``feat_next[k]`` is the first feature sample index >= k in the doubled
    index range (length 2M+1, sentinel 2M). Returns ``(value, i, j)``.
    """
    M = len(xs)
    X2 = np.concatenate([xs, xs])
    Y2 = np.concatenate([ys, ys])
    feat_idx = np.flatnonzero(np.asarray(feat_next[:-1]) == np.arange(2 * M))
    best, bi, bj = -1.0, -1, -1
    for i in range(M - 1):
        j = np.arange(i + 1, M)
        dx = xs[j] - xs[i]
        dy = ys[j] - ys[i]
        chord = np.hypot(dx, dy)
        ok = (chord <= r0) & (chord > tol)
        if not ok.any():
            continue
        j, dx, dy, chord = j[ok], dx[ok], dy[ok], chord[ok]
        L = j - i
        df = diam[i, L]
        db = diam[j, M - L]
        lf = s[j] - s[i]
        lb = total_len - lf
        mf = np.mod(s[i] + 0.5 * lf, total_len)
        mb = np.mod(s[j] + 0.5 * lb, total_len)
        fwd = np.where(np.abs(df - db) <= tol, mf <= mb, df < db)
        lo = np.where(fwd, i, j)
        hi = np.where(fwd, j, i + M)
        # features strictly inside each chosen range
        k = feat_idx
        inr = (k[None, :] > lo[:, None]) & (k[None, :] < hi[:, None])
        if not inr.any():
            continue
        fx = X2[k][None, :] - xs[i]
        fy = Y2[k][None, :] - ys[i]
        dev = np.abs(dx[:, None] * fy - dy[:, None] * fx)
        dev = np.where(inr, dev, 0.0).max(axis=1) / (chord * chord)
        a = int(np.argmax(dev))
        if dev[a] > best:
            best, bi, bj = float(dev[a]), i, int(j[a])
    return max(best, 0.0), bi, bj
