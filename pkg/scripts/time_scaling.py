#!/usr/bin/env python3
"""Timing study for the window DP: fixed k, growing n.

For fixed k the sweep does O(n) work, so the per-cell time should grow
linearly in n.  Prints a small table of medians over --repeats runs.
"""

import argparse
import statistics
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from petersen_alpha import alpha_window_dp  # noqa: E402


def measure(n: int, k: int, repeats: int) -> float:
    samples = []
    for _ in range(repeats):
        t0 = time.perf_counter()
        alpha_window_dp(n, k)
        samples.append(time.perf_counter() - t0)
    return statistics.median(samples)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--k", type=int, default=4)
    parser.add_argument("--sizes", type=int, nargs="+", default=[500, 1000, 2000, 4000, 8000])
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    base_n, base_t = None, None
    print(f"k = {args.k}")
    print(f"{'n':>8} {'median_s':>10} {'vs_first':>9}")
    for n in args.sizes:
        t = measure(n, args.k, args.repeats)
        if base_t is None:
            base_n, base_t = n, t
        print(f"{n:>8} {t:>10.4f} {t / base_t:>8.2f}x  (n ratio {n / base_n:.1f}x)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
