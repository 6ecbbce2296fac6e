#!/usr/bin/env python3
"""The color-or-certify dichotomy in action.

Starting from an uncolorable merged configuration, we perturb it in ways that
open a coloring (raising one budget, deleting one cover arc) and watch the
verdict flip; every verdict is checked by the independent verifier and the
exhaustive oracle.
"""

from dpdeg import (Colored, Configuration, brute_force, build_cover,
                   cert_to_sexp, gen_c, gen_k, merge, solve, verify)


def describe(tag, k):
    verdict = solve(k)
    ok, why = verify(k, verdict)
    oracle = brute_force(k)
    assert ok, why
    assert isinstance(verdict, Colored) == (oracle is not None)
    if isinstance(verdict, Colored):
        print(f"{tag}: COLORABLE, transversal {sorted(verdict.transversal)}")
        print(f"   elimination order {list(verdict.order)}")
    else:
        print(f"{tag}: CONSTRUCTIBLE {cert_to_sexp(verdict.certificate)}")
    print()


def main():
    # glue an odd C-configuration and a digon configuration at one vertex
    left = gen_c(5, "odd")
    right = gen_k(2, (1,), 2)
    glued = merge(left, 0, right, 0)
    describe("merged configuration", glued)

    # raising a single budget coordinate makes it colorable
    f = dict(glued.f)
    x = glued.cover.fibres[0][0]
    f[x] = (f[x][0] + 1, f[x][1])
    describe("one budget raised", Configuration(glued.cover, f))

    # deleting one cover arc breaks the rigid matching structure instead
    arcs = sorted(glued.cover.h.arcs)[:-1]
    cov = build_cover(glued.cover.base, glued.cover.fibres, arcs)
    describe("one cover arc deleted", Configuration(cov, glued.f))


if __name__ == "__main__":
    main()
