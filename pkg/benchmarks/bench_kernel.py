#!/usr/bin/env python
"""Compare the compiled and pure-Python backtracking kernels.

Usage:
    python benchmarks/bench_kernel.py
    python benchmarks/bench_kernel.py --repeat 5 --sweep-n 8
"""

import argparse
import time

from sstableaux import kernel
from sstableaux.core import compositions_of, partitions_of

# (label, shape, weight, operation)
CASES = [
    ("count (4,4,1,1)/(1,3,2,2,2)", (4, 4, 1, 1), (1, 3, 2, 2, 2), "count"),
    ("count (4,3,2,1)/1^10", (4, 3, 2, 1), (1,) * 10, "count"),
    ("count (5,4,3,2)/1^14", (5, 4, 3, 2), (1,) * 14, "count"),
    ("count (6,5,3,2)/(2,3,1,4,2,4)", (6, 5, 3, 2), (2, 3, 1, 4, 2, 4), "count"),
    ("enumerate (4,3,2,1)/1^10", (4, 3, 2, 1), (1,) * 10, "enumerate"),
    ("enumerate (5,3,2)/(1,2,1,2,1,2,1)", (5, 3, 2), (1, 2, 1, 2, 1, 2, 1), "enumerate"),
]


def timed(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def sweep(max_n):
    total = 0
    for n in range(max_n + 1):
        for mu in partitions_of(n):
            for a in compositions_of(n):
                total += len(kernel.enumerate_fillings(mu, a))
    return total


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--sweep-n", type=int, default=8, help="largest n in the all-inputs sweep")
    args = parser.parse_args()

    backends = sorted(kernel.BACKENDS)
    if "compiled" not in backends:
        print("compiled kernel not built; timing the Python fallback only")

    rows = []
    for label, shape, weight, op in CASES:
        row = [label]
        results = []
        for name in backends:
            kernel.set_backend(name)
            fn = kernel.count_fillings if op == "count" else kernel.enumerate_fillings
            secs, res = timed(lambda: fn(shape, weight), args.repeat)
            results.append(res if op == "count" else len(res))
            row.append(secs)
        assert len(set(results)) == 1, f"backends disagree on {label}: {results}"
        rows.append((row, results[0]))

    row = [f"enumerate every (mu, a), n <= {args.sweep_n}"]
    results = []
    for name in backends:
        kernel.set_backend(name)
        secs, res = timed(lambda: sweep(args.sweep_n), 1)
        results.append(res)
        row.append(secs)
    assert len(set(results)) == 1
    rows.append((row, results[0]))

    width = max(len(r[0][0]) for r in rows)
    header = f"{'case':<{width}}  {'size':>8}  " + "  ".join(f"{b:>10}" for b in backends)
    if len(backends) == 2:
        header += "  speedup"
    print(header)
    print("-" * len(header))
    for row, size in rows:
        line = f"{row[0]:<{width}}  {size:>8}  " + "  ".join(f"{t * 1e3:>8.2f}ms" for t in row[1:])
        if len(backends) == 2:
            compiled, python = row[1], row[2]
            line += f"  {python / compiled:>6.1f}x"
        print(line)


if __name__ == "__main__":
    main()
