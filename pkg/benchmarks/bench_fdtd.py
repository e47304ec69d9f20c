"""Throughput of the leapfrog kernel: numba loop vs vectorized numpy.

    python benchmarks/bench_fdtd.py [--nx 100000] [--steps 2000]

Both backends run the same modulated-medium problem; the script checks
that they agree before reporting nanoseconds per cell update.
"""

import argparse
import time

import numpy as np

from subvacuum.fdtd_oracle import _kernels


def problem(nx):
    x = np.arange(nx) * 0.05
    e = np.exp(-(((x - x.mean()) / 50.0) ** 2)) * np.cos(2.0 * x)
    ph = 0.02 * x
    return e, np.cos(ph), np.sin(ph)


def timed(backend, e, cx, sx, steps, cubic, repeats=3):
    args = dict(chi3=1e-3 if cubic else 0.0, cubic=cubic, probes=[len(e) // 2], backend=backend)
    _kernels.advance(e, e, 0.0, 0.04, 0.05, 2, 1.0, 1e-5, -1e-4, 0.01, cx, sx, **args)  # compile / warm up
    best, out = float("inf"), None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = _kernels.advance(e, e, 0.0, 0.04, 0.05, steps, 1.0, 1e-5, -1e-4, 0.01, cx, sx, **args)
        best = min(best, time.perf_counter() - t0)
    return best, out[1]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--nx", type=int, default=100_000)
    ap.add_argument("--steps", type=int, default=1000)
    ap.add_argument("--cubic", action="store_true")
    args = ap.parse_args(argv)

    e, cx, sx = problem(args.nx)
    backends = ["numpy"] + (["numba"] if _kernels.USE_NUMBA else [])
    results = {}
    for be in backends:
        secs, field = timed(be, e, cx, sx, args.steps, args.cubic)
        results[be] = field
        ns = secs / (args.nx * args.steps) * 1e9
        print(f"{be:6s} {secs:8.3f} s   {ns:7.2f} ns/update")
    if "numba" in results:
        diff = np.max(np.abs(results["numba"] - results["numpy"])) / np.max(np.abs(results["numpy"]))
        print(f"max relative difference numba vs numpy: {diff:.2e}")
    else:
        print("numba disabled (SUBVACUUM_DISABLE_NUMBA) or not installed")


if __name__ == "__main__":
    main()
