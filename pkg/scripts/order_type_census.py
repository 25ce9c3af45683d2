"""Census of order-type classes by arity.

Prints, for each arity k, the number of distinct order-type classes
realized by nonnegative integer k-tuples, the trivial k^k ceiling, and
the enumeration time.  The counts follow the ordered-set-partition
sequence, which the script recomputes independently as a sanity column.

Usage: python scripts/order_type_census.py [--max-k 6]
"""

import argparse
import math
import time

from jumpfree import enumerate_order_types


def fubini(k: int) -> int:
    if k == 0:
        return 1
    return sum(math.comb(k, j) * fubini(k - j) for j in range(1, k + 1))


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-k", type=int, default=6, help="largest arity to enumerate")
    args = parser.parse_args()

    print(f"{'k':>3} {'classes':>10} {'expected':>10} {'k^k bound':>12} {'seconds':>9}")
    for k in range(1, args.max_k + 1):
        t0 = time.perf_counter()
        classes = enumerate_order_types(k)
        dt = time.perf_counter() - t0
        expected = fubini(k)
        marker = "" if len(classes) == expected else "  MISMATCH"
        print(f"{k:>3} {len(classes):>10} {expected:>10} {k**k:>12} {dt:>9.3f}{marker}")


if __name__ == "__main__":
    main()
