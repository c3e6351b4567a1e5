"""Benchmark the compiled ladder kernel against the pure-Python fallback.

Usage: python benchmarks/bench_kernels.py [--cases N] [--seed S]
"""

import argparse
import time

from dehnfill import _ladder_py
from dehnfill.ladders import _encode, random_ladder

try:
    from dehnfill import _ladder_cy
except ImportError:
    _ladder_cy = None


def bench(kernel, encodings, step_bound=10**4):
    start = time.perf_counter()
    paths = violations = 0
    for enc in encodings:
        _, n_paths, n_viol, _, _, _ = kernel.scan_ladder(*enc, step_bound, False)
        paths += n_paths
        violations += n_viol
    return time.perf_counter() - start, paths, violations


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--cases", type=int, default=3000)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    print("generating %d ladders (seed %d)..." % (args.cases, args.seed))
    encodings = [
        _encode(random_ladder(args.seed + i))[:9] for i in range(args.cases)
    ]
    rows = []
    t_py, paths_py, viol_py = bench(_ladder_py, encodings)
    rows.append(("python", t_py, paths_py, viol_py))
    if _ladder_cy is not None:
        t_cy, paths_cy, viol_cy = bench(_ladder_cy, encodings)
        rows.append(("cython", t_cy, paths_cy, viol_cy))
        assert (paths_py, viol_py) == (paths_cy, viol_cy), "kernels disagree!"

    print("%-8s %10s %12s %10s" % ("backend", "time (s)", "paths", "violations"))
    for name, t, paths, viol in rows:
        print("%-8s %10.3f %12d %10d" % (name, t, paths, viol))
    if _ladder_cy is not None and t_cy:
        print("speedup: x%.1f (kernel only; ladder generation excluded)" % (t_py / t_cy))
    else:
        print("compiled kernel not available; ran the fallback only")


if __name__ == "__main__":
    main()
