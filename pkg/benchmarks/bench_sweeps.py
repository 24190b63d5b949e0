"""Benchmark the jitted sweep kernels against their pure-Python bodies.

Usage: python benchmarks/bench_sweeps.py [--nx NX --ny NY --sweeps N]

With numba active the jitted dispatcher and its ``.py_func`` fallback
run the identical source, so the ratio is the pure JIT speedup.  Under
SORPOISSON_DISABLE_NUMBA=1 only the Python path is timed.
"""

import argparse
import time

import numpy as np

from sorpoisson import BoundarySet, CENTRAL2, HOC, initial_guess, make_grid
from sorpoisson import kernels
from sorpoisson._numba import NUMBA_ENABLED
from sorpoisson.stencils import assemble_stencils


def time_kernel(fn, args, sweeps, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        for _ in range(sweeps):
            fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def bench(nx, ny, sweeps):
    grid = make_grid(nx, ny)
    bcs = BoundarySet.all_dirichlet()
    rhs = np.zeros(grid.shape)
    scratch = tuple(np.empty(grid.nx + 1) for _ in range(5))
    print(f"grid {nx}x{ny}, {sweeps} sweeps per timing, numba={'on' if NUMBA_ENABLED else 'off'}")
    header = f"{'kernel':24s} {'jit (s)':>10s} {'python (s)':>11s} {'speedup':>8s}"
    print(header)
    print("-" * len(header))
    for scheme in (CENTRAL2, HOC):
        E = assemble_stencils(grid, bcs, scheme)
        for label, fn, extra in (
            (f"point_sweep[{scheme}]", kernels.point_sweep, ()),
            (f"line_sweep[{scheme}]", kernels.line_sweep, scratch),
        ):
            fld = initial_guess(grid, bcs)
            args = (fld.values, E, rhs, fld.i_lo, fld.i_hi, fld.j_lo, fld.j_hi, 1.5) + extra
            if NUMBA_ENABLED:
                fn(*args)  # compile outside the timing
                t_jit = time_kernel(fn, args, sweeps)
                t_py = time_kernel(fn.py_func, args, max(1, sweeps // 50))
                t_py *= sweeps / max(1, sweeps // 50)
                print(f"{label:24s} {t_jit:10.4f} {t_py:11.4f} {t_py / t_jit:7.1f}x")
            else:
                t_py = time_kernel(fn, args, max(1, sweeps // 50))
                t_py *= sweeps / max(1, sweeps // 50)
                print(f"{label:24s} {'-':>10s} {t_py:11.4f} {'-':>8s}")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--nx", type=int, default=30)
    parser.add_argument("--ny", type=int, default=30)
    parser.add_argument("--sweeps", type=int, default=2000)
    args = parser.parse_args()
    bench(args.nx, args.ny, args.sweeps)


if __name__ == "__main__":
    main()
