#!/usr/bin/env python3
"""Recompute every headline table in one run.

Prints, per order: element count, interval count, total chains, maximal
chains, antichain censuses, width and Dilworth cover, rank sizes, and the
chromatic polynomial where the gate allows it.
"""

import argparse

from dyckposet import (antichain_census, build_poset, catalan_closed,
                       chain_polynomial, hasse_chromatic, interval_count,
                       maximal_chain_count, min_chain_cover, rank_sizes,
                       total_chains)
from dyckposet.config import Limits


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=5)
    args = parser.parse_args()
    limits = Limits(max_order=max(args.max_n, Limits().max_order))

    for n in range(args.max_n + 1):
        p = build_poset(n, limits)
        print(f"== order {n} ==")
        print(f"  elements            {p.size} (Catalan {catalan_closed(n)})")
        print(f"  intervals           {interval_count(p)}")
        print(f"  total chains        {total_chains(p)}")
        print(f"  maximal chains      {maximal_chain_count(p)}")
        print(f"  chain polynomial    {chain_polynomial(p)}")
        every = antichain_census(p)
        maximal = antichain_census(p, "maximal")
        maximum = antichain_census(p, "maximum")
        print(f"  antichains          {every.total} "
              f"(maximal {maximal.total}, width {maximum.width} "
              f"attained {maximum.total}x)")
        print(f"  Dilworth cover      {min_chain_cover(p)}")
        print(f"  rank sizes          {rank_sizes(n)}")
        if n <= Limits().chromatic_order:
            print(f"  chromatic           {hasse_chromatic(p)}")
        print()


if __name__ == "__main__":
    main()
