"""Time the enumeration kernels on both backends and check they agree.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""
from __future__ import annotations

import argparse
import time

from singan import catalog, kernels
from singan.cycles import compute_invariants


def _box_job(name, headroom=2):
    g = catalog.builtin(name).graph
    inv = compute_invariants(g)
    z = [int(x) for x in inv.Z]
    hi = [x + headroom for x in z]
    return lambda impl: kernels.scan_box(g.matrix, inv.KxFj, z, [1] * g.n, hi, 64, impl=impl)


def _antinef_job(name, cap):
    g = catalog.builtin(name).graph
    z = [int(x) for x in compute_invariants(g).Z]
    return lambda impl: kernels.scan_antinef(g.matrix, z, cap, impl=impl)


WORKLOADS = [
    ("box E8 headroom 2", _box_job("E8")),
    ("box remark210 headroom 2", _box_job("remark210")),
    ("antinef exercise_1_10 cap 6", _antinef_job("exercise_1_10", 6)),
    ("antinef type3_w3 cap 4", _antinef_job("type3_w3", 4)),
]


def best_of(fn, impl, repeat):
    best, result = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(impl)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    try:
        kernels.get_backend("cython")
        impls = ["python", "cython"]
    except ImportError:
        print("compiled backend not built; timing the pure-Python kernels only")
        impls = ["python"]

    print(f"{'workload':<30}" + "".join(f"{i:>12}" for i in impls) + f"{'speedup':>10}")
    for label, fn in WORKLOADS:
        times, results = [], []
        for impl in impls:
            # the slow backend runs once; it only needs to be in the right ballpark
            t, r = best_of(fn, impl, 1 if impl == "python" else args.repeat)
            times.append(t)
            results.append(r)
        if len(results) == 2 and results[0] != results[1]:
            raise SystemExit(f"{label}: backends disagree")
        speed = f"{times[0] / times[-1]:>9.1f}x" if len(times) == 2 else ""
        print(f"{label:<30}" + "".join(f"{t:>11.3f}s" for t in times) + speed)


if __name__ == "__main__":
    main()
