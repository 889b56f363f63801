"""Benchmark the numba kernels against the pure-numpy fallback.

Times the two hot paths on identical workloads:
  * exponential-integral evaluation over large abscissa arrays,
  * the full adaptive quadrature behind the (n, q, s) smoothing bound.

Run:  python3 benchmarks/bench_backends.py
"""

import time

import numpy as np

from heatnorm.backends import numba_impl, numpy_impl
from heatnorm.quadrature import QuadratureConfig
import heatnorm.backends as backends
import heatnorm.quadrature as quadrature


def timeit(fn, repeats=5):
    best = np.inf
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def bench_e1(size):
    x = np.geomspace(1e-6, 600.0, size)
    # warm up the JIT before timing
    numba_impl.e1(x[:16].copy())
    t_numba = timeit(lambda: numba_impl.e1(x.copy()))
    t_numpy = timeit(lambda: numpy_impl.e1(x.copy()))
    check = np.max(np.abs(numba_impl.e1(x.copy()) - numpy_impl.e1(x.copy())))
    return t_numba, t_numpy, check


def bench_quadrature():
    ts = np.geomspace(1e-6, 1e2, 200)
    cfg = QuadratureConfig()

    def sweep():
        for t in ts:
            quadrature.radial_kernel_integral(2, 2.0 * t, 1.0, cfg)

    saved = backends.gk15_radial
    results = {}
    try:
        for name, impl in (("numba", numba_impl), ("numpy", numpy_impl)):
            backends.gk15_radial = impl.gk15_radial
            sweep()  # warm up
            results[name] = timeit(sweep, repeats=3)
    finally:
        backends.gk15_radial = saved
    return results["numba"], results["numpy"]


def main():
    print(f"{'workload':<34} {'numba':>10} {'numpy':>10} {'speedup':>8}")
    for size in (10_000, 100_000, 1_000_000):
        tb, tp, check = bench_e1(size)
        print(f"{f'E1 over {size} points':<34} {tb*1e3:>8.2f}ms {tp*1e3:>8.2f}ms "
              f"{tp/tb:>7.2f}x   (max |diff| = {check:.1e})")
    tb, tp = bench_quadrature()
    print(f"{'200 adaptive radial integrals':<34} {tb*1e3:>8.2f}ms {tp*1e3:>8.2f}ms "
          f"{tp/tb:>7.2f}x")


if __name__ == "__main__":
    main()
