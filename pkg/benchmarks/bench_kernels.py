"""Compare the compiled kernels with the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""
import argparse
import time

import numpy as np

from jordanlevels import _kernels
from jordanlevels.constants import build_samples
from jordanlevels.generators import SnowflakeSpec, rohde_snowflake


def timed(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--depth", type=int, default=2)
    args = ap.parse_args()

    curve = rohde_snowflake(SnowflakeSpec(6, 0.26, args.depth, "seeded", 7))
    T = curve.table
    x0, y0, x1, y1 = curve.bbox
    X, Y = np.meshgrid(np.linspace(x0, x1, 200), np.linspace(y0, y1, 200))
    px, py = X.ravel(), Y.ravel()
    S = build_samples(curve)
    S.diam  # build the table outside the timed region
    fn = S.feat_next()
    r0 = curve.diameter / 8

    cases = {
        "min_distance": lambda: _kernels.min_distance(px, py, T),
        "winding": lambda: _kernels.winding(px, py, T),
        "zeta_scan": lambda: _kernels.zeta_scan(S.xy[:, 0], S.xy[:, 1], S.s, fn, S.diam, r0,
                                                curve.length, curve.tol),
    }
    print(f"edges={len(curve.edges)} grid_points={px.size} samples={len(S)}")
    print(f"{'kernel':<14}{'compiled_s':>12}{'python_s':>12}{'speedup':>10}  agree")
    for name, fn_ in cases.items():
        _kernels.use_backend("compiled")
        tc, oc = timed(fn_, args.repeat)
        _kernels.use_backend("python")
        tp, op = timed(fn_, 1 if name == "zeta_scan" else args.repeat)
        agree = np.allclose(np.asarray(oc, dtype=float), np.asarray(op, dtype=float), rtol=1e-12, atol=1e-12)
        print(f"{name:<14}{tc:>12.4f}{tp:>12.4f}{tp / tc:>10.1f}  {agree}")
    _kernels.use_backend("compiled")


if __name__ == "__main__":
    main()
