"""Benchmark the compiled Jacobi kernel against the pure-numpy fallback.

Usage: python benchmarks/bench_kernels.py
"""

import time

import numpy as np

from radius_bounds import _kernels_py

try:
    from radius_bounds import _kernels
except ImportError:
    _kernels = None


def time_call(fn, reps):
    t0 = time.perf_counter()
    for _ in range(reps):
        fn()
    return (time.perf_counter() - t0) / reps


def main():
    rng = np.random.default_rng(0)
    print(f"{'n':>4} {'thetas':>7} {'compiled':>12} {'numpy':>12} {'ratio':>7}")
    for n in (2, 3, 4, 6, 8, 12, 16):
        a = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2 * n)
        for m in (1, 32, 256, 1024):
            thetas = np.linspace(0.0, 2.0 * np.pi, m, endpoint=False)
            reps = max(3, 3000 // (m * n))
            t_py = time_call(lambda: _kernels_py.rotated_top_eigs(a, thetas), reps)
            if _kernels is None:
                print(f"{n:>4} {m:>7} {'n/a':>12} {t_py * 1e6:>10.1f}us")
                continue
            t_c = time_call(lambda: _kernels.rotated_top_eigs(a.real, a.imag, thetas), reps)
            print(f"{n:>4} {m:>7} {t_c * 1e6:>10.1f}us {t_py * 1e6:>10.1f}us "
                  f"{t_c / t_py:>7.2f}")
    if _kernels is None:
        print("\ncompiled extension not available; only the numpy path was timed")


if __name__ == "__main__":
    main()
