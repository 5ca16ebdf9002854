#!/usr/bin/env python3
"""Benchmark: compiled kernels vs the NumPy fallback.

Times the raw kernels on several array sizes, then a realistic workload
(profile-curve reconstruction plus a 16x16 curvature-oracle grid) with
each backend patched in.  Run from the repository root:

    python benchmarks/bench_kernels.py
"""

import time

import numpy as np

from lrotor import _kernels
from lrotor._kernels import _fallback

try:
    from lrotor._kernels import _core
except ImportError:
    _core = None


def timeit(fn, *args, repeat=200):
    fn(*args)  # warm up
    best = float("inf")
    for _ in range(5):
        t0 = time.perf_counter()
        for _ in range(repeat):
            fn(*args)
        best = min(best, (time.perf_counter() - t0) / repeat)
    return best


def bench_raw():
    print(f"{'kernel':34s} {'n':>7s} {'fallback':>12s} {'compiled':>12s} "
          f"{'speedup':>8s}")
    cases = [
        ("momentum_values cubic", lambda m, r: m.momentum_values(
            _fallback.CUBIC, 1.0, -2.0, r)),
        ("momentum_derivs power", lambda m, r: m.momentum_derivs(
            _fallback.POWER, -2.0, 1.2, r)),
        ("graph_integrand hyperbolic1", lambda m, r: m.graph_integrand(
            _fallback.H1, 1.0, _fallback.QUADRATIC, 1.0, 0.5, r)),
        ("arc_integrand elliptic", lambda m, r: m.arc_integrand(
            _fallback.ELL, 1.0, _fallback.INVERSE_LINEAR, 1.0, 0.0, r)),
    ]
    rng = np.random.default_rng(1)
    for n in (48, 512, 8192):
        r = rng.uniform(0.1, 0.6, n)
        for name, call in cases:
            t_fb = timeit(call, _fallback, r)
            if _core is None:
                print(f"{name:34s} {n:7d} {t_fb * 1e6:10.2f}us "
                      f"{'-':>12s} {'-':>8s}")
                continue
            t_co = timeit(call, _core, r)
            print(f"{name:34s} {n:7d} {t_fb * 1e6:10.2f}us "
                  f"{t_co * 1e6:10.2f}us {t_fb / t_co:7.1f}x")


def bench_workload():
    """End-to-end: reconstruction + oracle grid under each backend."""
    import math

    from lrotor.momentum import InverseLinear, RotationClass
    from lrotor.quadrature import generatrix_graph
    from lrotor.surface import SurfaceSpec, _graph_evaluator
    from lrotor.verify import curvature_grid_numeric

    names = ["momentum_values", "momentum_derivs", "graph_transform",
             "arc_transform", "graph_integrand", "arc_integrand"]

    def run_with(impl):
        saved = {n: getattr(_kernels, n) for n in names}
        for n in names:
            setattr(_kernels, n, getattr(impl, n))
        _graph_evaluator.cache_clear()
        try:
            t0 = time.perf_counter()
            for _ in range(5):
                generatrix_graph(InverseLinear(1.0),
                                 RotationClass.ELLIPTIC, 1, (0.4, 2.2),
                                 129, 0.0)
                spec = SurfaceSpec(RotationClass.ELLIPTIC, 1,
                                   InverseLinear(1.0), (0.4, 2.2),
                                   math.asinh(0.4))
                rs = np.linspace(0.5, 2.1, 16)
                ts = np.linspace(0.0, 6.0, 16)
                curvature_grid_numeric(spec, rs, ts)
                _graph_evaluator.cache_clear()
            return (time.perf_counter() - t0) / 5
        finally:
            for n, fn in saved.items():
                setattr(_kernels, n, fn)
            _graph_evaluator.cache_clear()

    t_fb = run_with(_fallback)
    line = f"{'reconstruction + oracle grid':34s} {'-':>7s} {t_fb * 1e3:10.2f}ms"
    if _core is not None:
        t_co = run_with(_core)
        line += f" {t_co * 1e3:10.2f}ms {t_fb / t_co:7.1f}x"
    print(line)


def main():
    print(f"active backend: {_kernels.BACKEND}")
    if _core is None:
        print("compiled extension unavailable; timing the fallback only")
    bench_raw()
    bench_workload()


if __name__ == "__main__":
    main()
