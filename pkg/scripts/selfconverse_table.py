#!/usr/bin/env python3
"""Print the self-converse digraph fraction table, exact counts included.

The fraction column is truncated to three significant digits; counts come
from Burnside sums over cycle types and are exact integers.
"""

import argparse

from hermia.counting import count_digraphs, count_self_converse, self_converse_fraction_sci


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=20)
    ap.add_argument("--counts", action="store_true", help="include the exact counts")
    args = ap.parse_args()
    for n in range(3, args.max_n + 1):
        frac = self_converse_fraction_sci(n)
        if args.counts:
            print(f"{n}\t{frac}\t{count_self_converse(n)}\t{count_digraphs(n)}")
        else:
            print(f"{n}\t{frac}")


if __name__ == "__main__":
    main()
