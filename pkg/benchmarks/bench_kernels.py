#!/usr/bin/env python3
"""Benchmark the compiled enumeration kernel against the pure-Python twin.

Runs the same product-square workloads through both implementations,
verifies they produce identical output, and reports wall times.

    python3 benchmarks/bench_kernels.py            # default workloads
    python3 benchmarks/bench_kernels.py --repeat 3 # best of three
"""

from __future__ import annotations

import argparse
import time
from itertools import product

from segmagic import _kernel_py

try:
    from segmagic import _kernel as _compiled
except ImportError:
    _compiled = None

WORKLOADS = [
    # (label, alphabet, order, level)
    ("order 3, {1,2,5}, semi-magic", (1, 2, 5), 3, 1),
    ("order 3, {0,1,2}, magic", (0, 1, 2), 3, 2),
    ("order 3, {0,1,2}, pandiagonal", (0, 1, 2), 3, 3),
    ("order 4, {1,2,5,8}, semi-magic", (1, 2, 5, 8), 4, 1),
    ("order 4, {1,2,5,8}, magic (full)", (1, 2, 5, 8), 4, 2),
    ("order 4, {0,1,2,5}, magic (full)", (0, 1, 2, 5), 4, 2),
]


def run(kernel, alphabet, order, level, repeat):
    values = sorted(10 * a + b for a, b in product(alphabet, repeat=2))
    target = 11 * sum(alphabet)
    best = None
    out = None
    for _ in range(repeat):
        start = time.perf_counter()
        out = kernel.product_square_indices(values, order, target, level)
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return best, out


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=1, help="best of N runs")
    args = parser.parse_args()

    if _compiled is None:
        print("compiled kernel not built; showing pure-python times only\n")

    header = f"{'workload':38} {'solutions':>9} {'pure':>10}"
    if _compiled is not None:
        header += f" {'compiled':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))

    for label, alphabet, order, level in WORKLOADS:
        pure_time, pure_out = run(_kernel_py, alphabet, order, level, args.repeat)
        line = f"{label:38} {len(pure_out):>9} {pure_time:>9.3f}s"
        if _compiled is not None:
            fast_time, fast_out = run(_compiled, alphabet, order, level, args.repeat)
            if fast_out != pure_out:
                print(f"MISMATCH on {label}: kernels disagree")
                return 1
            line += f" {fast_time:>9.3f}s {pure_time / fast_time:>7.1f}x"
        print(line)

    print("\nkernel outputs identical on every workload")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
