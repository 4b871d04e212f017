#!/usr/bin/env python3
"""Tabulate growth of the kernel subgroup's first homology by stage count.

For each j up to --jmax, computes H1 of the index-60 kernel of the staged
assignment on the j-stage link group and prints free rank, torsion, the
minimal generator count, and the rank bound it forces on the ambient
group, with wall-clock timings.
"""

import argparse
import time
from collections import Counter

from knotcover.subgroups import kernel_homology, schreier_rank_bound


def torsion_summary(torsion: tuple[int, ...]) -> str:
    if not torsion:
        return "-"
    counts = Counter(torsion)
    return " ".join(
        f"{d}^{n}" if n > 1 else str(d) for d, n in sorted(counts.items())
    )


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--jmax", type=int, default=4,
                        help="largest stage count to compute (default 4)")
    parser.add_argument("--force", action="store_true",
                        help="compute past the built-in stage cap")
    args = parser.parse_args()

    header = (f"{'j':>3} {'free':>5} {'torsion':>24} {'min gens':>9} "
              f"{'rank bound':>11} {'time':>8}")
    print(header)
    print("-" * len(header))
    for j in range(1, args.jmax + 1):
        start = time.perf_counter()
        inv = kernel_homology(j, force=args.force)
        elapsed = time.perf_counter() - start
        bound = schreier_rank_bound(inv.min_generators, 60)
        print(f"{j:>3} {inv.free_rank:>5} {torsion_summary(inv.torsion):>24} "
              f"{inv.min_generators:>9} {str(bound.value):>8} ({bound.ceiling})"
              f" {elapsed:>7.2f}s")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
