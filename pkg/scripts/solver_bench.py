"""Benchmark the three target-zero solvers on seeded random multisets.

Per input size the script draws a batch of multisets, runs every method
that accepts the instance, verifies the decisions agree, and prints mean
wall-clock time per method.  The exhaustive method drops out past its
capacity guard, which is the point where the other two keep scaling.

Usage: python scripts/solver_bench.py [--sizes 8,12,16,20] [--trials 50]
"""

import argparse
import random
import statistics
import time

from jumpfree import CapacityError, IntMultiset, solve_subset_sum

METHODS = ("exhaustive", "dp", "mitm")


def bench(sizes: list[int], trials: int, seed: int, value_bound: int) -> None:
    rng = random.Random(seed)
    print(f"{'size':>5} " + " ".join(f"{m + ' ms':>14}" for m in METHODS) + f" {'solvable':>9}")
    for size in sizes:
        times: dict[str, list[float]] = {m: [] for m in METHODS}
        skipped = set()
        solvable = 0
        for _ in range(trials):
            ms = IntMultiset.from_values(
                rng.randint(-value_bound, value_bound) for _ in range(size)
            )
            decisions = {}
            for method in METHODS:
                try:
                    t0 = time.perf_counter()
                    cert = solve_subset_sum(ms, method)
                    times[method].append((time.perf_counter() - t0) * 1000)
                    decisions[method] = cert is not None
                except CapacityError:
                    skipped.add(method)
            if len(set(decisions.values())) > 1:
                raise AssertionError(f"methods disagree on {ms}: {decisions}")
            solvable += decisions.get("dp", False)
        cells = []
        for method in METHODS:
            if method in skipped or not times[method]:
                cells.append(f"{'capacity':>14}")
            else:
                cells.append(f"{statistics.mean(times[method]):>14.3f}")
        print(f"{size:>5} " + " ".join(cells) + f" {solvable:>6}/{trials}")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="8,12,16,20,24,28")
    parser.add_argument("--trials", type=int, default=50)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--value-bound", type=int, default=9)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",") if s]
    bench(sizes, args.trials, args.seed, args.value_bound)


if __name__ == "__main__":
    main()
