#!/usr/bin/env python3
"""Critical covers, low vertices, and the Brooks-type classification.

For small digraphs we search for critical uniform covers, inspect which
vertices are low (degree exactly the threshold times the fibre size), check
that every low block is an allowed family, and tabulate the structural
Brooks exceptions together with their attained parameter values.
"""

from dpdeg import (bidirected_complete, bidirected_cycle, brooks_classify,
                   builtin, check_block_structure, chi, directed_cycle,
                   find_critical_cover, single_arc, transitive_tournament)

AD = builtin("ad")


def main():
    print("critical 1- and 2-uniform covers and their low blocks:")
    for name, d in [("digon", bidirected_complete(2)),
                    ("directed triangle", directed_cycle(3)),
                    ("bidirected K3", bidirected_complete(3)),
                    ("directed 4-cycle", directed_cycle(4))]:
        for k in (1, 2):
            cov = find_critical_cover(d, AD, k)
            if cov is None:
                print(f"  {name}, k={k}: no critical cover")
                continue
            rep = check_block_structure(d, cov, AD, mode="dp")
            tags = [f"{t.kind}({t.n})" for t in rep.block_tags]
            print(f"  {name}, k={k}: low vertices {list(rep.low_vertices)}, "
                  f"blocks {tags}, violations {len(rep.violations)}")

    print()
    print("Brooks-type classification (bound = max ceiling degree ratio):")
    samples = [("bidirected K4", bidirected_complete(4)),
               ("bidirected 5-cycle", bidirected_cycle(5)),
               ("directed 5-cycle", directed_cycle(5)),
               ("single arc", single_arc()),
               ("transitive tournament T4", transitive_tournament(4))]
    for name, d in samples:
        b = brooks_classify(d, AD)
        value = chi(d, AD, "plain")
        mark = "attains bound+1" if value == b.bound + 1 else "within bound"
        print(f"  {name:26s} bound={b.bound} exceptional={b.exceptional} "
              f"plain={value} ({mark})")


if __name__ == "__main__":
    main()
