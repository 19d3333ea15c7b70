"""Print exact desingularized values and coefficient-table statistics.

    python scripts/value_tables.py --depth 3 --max-weight 6
"""
from __future__ import annotations

import argparse

from deszeta.coeff_table import expand_G, table_stats
from deszeta.desing_values import zeta_des_value
from deszeta.exact_core import compositions


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--depth", type=int, default=2)
    ap.add_argument("--max-weight", type=int, default=6)
    args = ap.parse_args()

    print(f"values at non-positive integers, depth {args.depth}")
    for w in range(args.max_weight + 1):
        for k in compositions(w, args.depth):
            v = zeta_des_value(k)
            if v:
                print(f"  -k = {tuple(-x for x in k)!s:24s} {v}")

    print("\ncoefficient tables: depth, terms, max |m_j|, max total u-degree")
    for r in range(1, 7):
        n, mm, ml = table_stats(expand_G(r))
        print(f"  {r}  {n:6d}  {mm:3d}  {ml:3d}")


if __name__ == "__main__":
    main()
