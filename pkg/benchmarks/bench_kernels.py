#!/usr/bin/env python3
"""Benchmark the compiled bitmask kernels against the pure-Python fallback.

Runs the extension-semantics enumeration and the dependency filtering on
random instances at increasing widths and prints a timing table.

Usage: python3 benchmarks/bench_kernels.py [--widths 12,16,18] [--repeat 3]
"""

import argparse
import random
import time

from uarg import _kernels_py

try:
    from uarg import _kernels_cy
except ImportError:
    _kernels_cy = None


def random_instance(rng, n, density=0.15):
    attackers = [0] * n
    targets = [0] * n
    for i in range(n):
        for j in range(n):
            if rng.random() < density:
                targets[i] |= 1 << j
                attackers[j] |= 1 << i
    deps = []
    for _ in range(max(2, n // 2)):
        kind = rng.randint(0, 2)
        x = rng.randrange(1, 1 << n)
        y = rng.randrange(1, 1 << n) if kind == 0 else 0
        deps.append((kind, x, y))
    return attackers, targets, deps


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--widths", default="10,14,16,18")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    widths = [int(w) for w in args.widths.split(",")]
    rng = random.Random(0)

    if _kernels_cy is None:
        print("compiled kernels not built; timing the fallback only")

    header = f"{'kernel':<22}{'n':>4}{'python':>12}"
    if _kernels_cy is not None:
        header += f"{'cython':>12}{'speedup':>10}"
    print(header)
    for n in widths:
        attackers, targets, deps = random_instance(rng, n)
        for label, call in (
            ("semantics/admissible",
             lambda mod: mod.semantics_masks(n, attackers, targets,
                                             _kernels_py.MODE_ADMISSIBLE)),
            ("semantics/stable",
             lambda mod: mod.semantics_masks(n, attackers, targets,
                                             _kernels_py.MODE_STABLE)),
            ("dependency filter",
             lambda mod: mod.dependency_masks(n, deps)),
        ):
            py_time, py_out = best_of(lambda: call(_kernels_py), args.repeat)
            row = f"{label:<22}{n:>4}{py_time * 1000:>10.1f}ms"
            if _kernels_cy is not None:
                cy_time, cy_out = best_of(lambda: call(_kernels_cy),
                                          args.repeat)
                assert py_out == cy_out, "backend results diverged"
                row += f"{cy_time * 1000:>10.1f}ms{py_time / cy_time:>9.1f}x"
            print(row)


if __name__ == "__main__":
    main()
