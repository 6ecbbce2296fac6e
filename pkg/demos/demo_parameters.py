#!/usr/bin/env python3
"""The three coloring parameters on small digraphs.

Plain, list and dp values agree with the classical facts: directed cycles
need two colors, bidirected complete graphs reproduce ordinary chromatic
numbers, and the chain plain <= list <= dp holds everywhere it is computable.
"""

from dpdeg import (bidirected_complete, bidirected_cycle, builtin, chi,
                   directed_cycle, single_arc, transitive_tournament)
from dpdeg.enumeration import all_digraphs
from dpdeg.errors import ScaleCapExceeded

AD = builtin("ad")


def row(name, d):
    vals = []
    for variant in ("plain", "list", "dp"):
        try:
            vals.append(str(chi(d, AD, variant)))
        except ScaleCapExceeded:
            vals.append("-")
    print(f"{name:28s} plain={vals[0]:>2s} list={vals[1]:>2s} dp={vals[2]:>2s}")


def main():
    print("acyclic-coloring parameters (\"-\" marks values beyond the exact caps)")
    for n in range(2, 7):
        row(f"directed cycle C{n}", directed_cycle(n))
    for n in range(1, 5):
        row(f"bidirected K{n}", bidirected_complete(n))
    row("bidirected 5-cycle", bidirected_cycle(5))
    row("transitive tournament T4", transitive_tournament(4))
    row("single arc", single_arc())

    print()
    print("chain check over every connected digraph of order 3:")
    worst = 0
    for d in all_digraphs(3, connected_only=True):
        p, l, dp = (chi(d, AD, v) for v in ("plain", "list", "dp"))
        assert p <= l <= dp
        worst = max(worst, dp)
    print(f"  all chains hold; largest dp value seen: {worst}")


if __name__ == "__main__":
    main()
