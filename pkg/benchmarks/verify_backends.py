"""Compare the two coverage-counting kernels behind verify.

Runs the full verifier on a spread of design sizes under
GENCOV_BACKEND=numpy and GENCOV_BACKEND=numba and reports wall times.
The first numba call pays JIT compilation; a warmup run absorbs it.

Usage: python3 benchmarks/verify_backends.py [--repeats N]
"""

import argparse
import os
import time

from gencov import PartStructure, greedy_cover, product_hadamard, verify
from gencov._kernels import HAS_NUMBA


def build_workloads():
    base = greedy_cover(PartStructure((3, 4), (2, 3)), 2)
    square = product_hadamard(base, base)
    cube = product_hadamard(square, base)
    fourth = product_hadamard(cube, base)
    return [
        ("square (9,16) t=2", square),
        ("cube (27,64) t=2", cube),
        ("fourth (81,256) t=2", fourth),
        ("deep (8,6)/(4,3) t=4", greedy_cover(PartStructure((8, 6), (4, 3)), 4)),
    ]


def time_backend(name, design, repeats):
    os.environ["GENCOV_BACKEND"] = name
    verify(design)  # warmup; absorbs JIT compilation on the numba path
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        report = verify(design)
        best = min(best, time.perf_counter() - t0)
    return best, report


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeats", type=int, default=5)
    args = ap.parse_args()

    saved = os.environ.get("GENCOV_BACKEND")
    backends = ["numpy"] + (["numba"] if HAS_NUMBA else [])
    if not HAS_NUMBA:
        print("numba not installed; timing the numpy kernel only")

    print(f"{'workload':32} {'blocks':>6} {'tuples':>7} "
          + " ".join(f"{b + ' ms':>10}" for b in backends)
          + ("   speedup" if len(backends) == 2 else ""))
    try:
        for label, design in build_workloads():
            times = []
            for backend in backends:
                best, report = time_backend(backend, design, args.repeats)
                times.append(best)
                assert report.valid
            row = (f"{label:32} {len(design):>6} {report.checked_tuples:>7} "
                   + " ".join(f"{t * 1000:>10.2f}" for t in times))
            if len(times) == 2:
                row += f"   {times[0] / times[1]:>6.1f}x"
            print(row)
    finally:
        if saved is None:
            os.environ.pop("GENCOV_BACKEND", None)
        else:
            os.environ["GENCOV_BACKEND"] = saved


if __name__ == "__main__":
    main()
