# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; see ``_fallback`` for the reference semantics."""
import numpy as np
cimport numpy as cnp
from libc.math cimport atan2, cos, sin, hypot, fabs, fmod, floor, M_PI, INFINITY

cnp.import_array()

cdef double TWO_PI = 2.0 * M_PI


cdef inline double _edge_dist(double px, double py, const double[:, ::1] T, Py_ssize_t e) nogil:
    cdef double ax = T[e, 1], ay = T[e, 2], bx = T[e, 3], by = T[e, 4]
    cdef double dx, dy, L2, t, th, sw, d0, d1
    if T[e, 0] == 0.0:
        dx = bx - ax
        dy = by - ay
        L2 = dx * dx + dy * dy
        t = ((px - ax) * dx + (py - ay) * dy) / L2
        if t < 0.0:
            t = 0.0
        elif t > 1.0:
            t = 1.0
        return hypot(px - (ax + t * dx), py - (ay + t * dy))
    sw = T[e, 9]
    th = atan2(py - T[e, 6], px - T[e, 5]) - T[e, 8]
    if sw < 0:
        th = -th
    th = fmod(th, TWO_PI)
    if th < 0:
        th += TWO_PI
    if th <= fabs(sw):
        return fabs(hypot(px - T[e, 5], py - T[e, 6]) - T[e, 7])
    d0 = hypot(px - ax, py - ay)
    d1 = hypot(px - bx, py - by)
    return d0 if d0 < d1 else d1


def min_distance(px, py, table):
    cdef const double[::1] X = np.ascontiguousarray(px, dtype=np.float64).ravel()
    cdef const double[::1] Y = np.ascontiguousarray(py, dtype=np.float64).ravel()
    cdef const double[:, ::1] T = np.ascontiguousarray(table, dtype=np.float64)
    cdef Py_ssize_t n = X.shape[0], m = T.shape[0], i, e
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] O = out
    cdef double best, d
    with nogil:
        for i in range(n):
            best = INFINITY
            for e in range(m):
                d = _edge_dist(X[i], Y[i], T, e)
                if d < best:
                    best = d
            O[i] = best
    return out.reshape(np.shape(px))


def winding(px, py, table):
    cdef const double[::1] X = np.ascontiguousarray(px, dtype=np.float64).ravel()
    cdef const double[::1] Y = np.ascontiguousarray(py, dtype=np.float64).ravel()
    cdef const double[:, ::1] T = np.ascontiguousarray(table, dtype=np.float64)
    cdef Py_ssize_t n = X.shape[0], m = T.shape[0], i, e
    out = np.empty(n, dtype=np.int64)
    cdef long long[::1] O = out
    cdef double tot, ux, uy, vx, vy, mx, my, cr, dt, sc, x, y, am
    with nogil:
        for i in range(n):
            x = X[i]
            y = Y[i]
            tot = 0.0
            for e in range(m):
                ux = T[e, 1] - x
                uy = T[e, 2] - y
                vx = T[e, 3] - x
                vy = T[e, 4] - y
                cr = ux * vy - uy * vx
                dt = ux * vx + uy * vy
                if T[e, 0] != 0.0 and hypot(x - T[e, 5], y - T[e, 6]) < T[e, 7]:
                    if cr == 0.0 and dt < 0.0:
                        am = T[e, 8] + 0.5 * T[e, 9]
                        mx = T[e, 5] + T[e, 7] * cos(am) - x
                        my = T[e, 6] + T[e, 7] * sin(am) - y
                        tot += atan2(ux * my - uy * mx, ux * mx + uy * my)
                        tot += atan2(mx * vy - my * vx, mx * vx + my * vy)
                        continue
                    sc = (T[e, 3] - T[e, 1]) * (T[e, 6] - T[e, 2]) - (T[e, 4] - T[e, 2]) * (T[e, 5] - T[e, 1])
                    if cr * sc < 0:
                        tot += TWO_PI if T[e, 9] > 0 else -TWO_PI
                tot += atan2(cr, dt)
            O[i] = <long long>floor(tot / TWO_PI + 0.5)
    return out.reshape(np.shape(px))


def zeta_scan(xs, ys, s, feat_next, diam, double r0, double total_len, double tol):
    cdef const double[::1] X = np.ascontiguousarray(xs, dtype=np.float64)
    cdef const double[::1] Y = np.ascontiguousarray(ys, dtype=np.float64)
    cdef const double[::1] S = np.ascontiguousarray(s, dtype=np.float64)
    cdef const long long[::1] F = np.ascontiguousarray(feat_next, dtype=np.int64)
    cdef const double[:, ::1] D = np.ascontiguousarray(diam, dtype=np.float64)
    cdef Py_ssize_t M = X.shape[0], i, j, k, kk, L, lo, hi
    cdef double dx, dy, chord, df, db, lf, lb, mf, mb, dev, v, fx, fy
    cdef double best = -1.0
    cdef Py_ssize_t bi = -1, bj = -1
    cdef bint fwd
    with nogil:
        for i in range(M - 1):
            for j in range(i + 1, M):
                dx = X[j] - X[i]
                dy = Y[j] - Y[i]
                chord = hypot(dx, dy)
                if chord > r0 or chord <= tol:
                    continue
                L = j - i
                df = D[i, L]
                db = D[j, M - L]
                if fabs(df - db) <= tol:
                    lf = S[j] - S[i]
                    lb = total_len - lf
                    mf = fmod(S[i] + 0.5 * lf, total_len)
                    mb = fmod(S[j] + 0.5 * lb, total_len)
                    fwd = mf <= mb
                else:
                    fwd = df < db
                if fwd:
                    lo = i
                    hi = j
                else:
                    lo = j
                    hi = i + M
                dev = 0.0
                k = F[lo + 1]
                while k < hi:
                    kk = k if k < M else k - M
                    fx = X[kk] - X[i]
                    fy = Y[kk] - Y[i]
                    v = fabs(dx * fy - dy * fx)
                    if v > dev:
                        dev = v
                    k = F[k + 1]
                dev = dev / (chord * chord)
                if dev > best:
                    best = dev
                    bi = i
                    bj = j
    if best < 0:
        best = 0.0
    return best, bi, bj
