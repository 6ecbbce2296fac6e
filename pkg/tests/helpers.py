"""Shared samplers and independent oracles for the test suite.

The oracles here deliberately avoid the library's own algorithms: strict
degeneracy is checked by exhaustive subset enumeration, colorings by raw
product search, so derived expected values are independently computed.
"""

from __future__ import annotations

import itertools
import random

from dpdeg.config import Configuration
from dpdeg.constructible import augment_zero, gen_a, gen_c, gen_k, gen_m, merge
from dpdeg.cover import build_cover
from dpdeg.digraph import Digraph, blocks, build_digraph


# -- independent oracles ---------------------------------------------------------

def oracle_strictly_f_degenerate(h, f, scope) -> bool:
    """Exhaustive: no nonempty subset of scope is f-tight (every color having
    out-degree >= out-budget and in-degree >= in-budget inside the subset)."""
    scope = sorted(scope)
    for size in range(1, len(scope) + 1):
        for subset in itertools.combinations(scope, size):
            sub = set(subset)
            tight = True
            for x in subset:
                od = len(h.out[x] & sub)
                idd = len(h.inn[x] & sub)
                if od < f[x][0] or idd < f[x][1]:
                    tight = False
                    break
            if tight:
                return False
    return True


def oracle_colorable(k: Configuration) -> bool:
    """Raw product search over fibres with the exhaustive degeneracy oracle."""
    if any(not fib for fib in k.cover.fibres):
        return False
    for combo in itertools.product(*k.cover.fibres):
        if oracle_strictly_f_degenerate(k.cover.h, k.f, combo):
            return True
    return False


def oracle_chi_plain(d: Digraph, p, kmax=None) -> int:
    """Raw coloring enumeration: least k admitting a coloring with all classes
    inside the property; independent of the subset dynamic program."""
    if d.n == 0:
        return 0
    kmax = kmax or d.n
    for k in range(1, kmax + 1):
        for phi in itertools.product(range(k), repeat=d.n):
            ok = True
            for c in range(k):
                cls = [v for v in range(d.n) if phi[v] == c]
                if not p.member(d.induced(cls)):
                    ok = False
                    break
            if ok:
                return k
    return kmax + 1


def oracle_is_2connected(d: Digraph) -> bool:
    if d.n < 3 or not d.is_connected():
        return False
    return all(d.delete_vertex(v).is_connected() for v in range(d.n))


# -- random structures -------------------------------------------------------------

def random_connected_digraph(rng: random.Random, n_min=1, n_max=6, extra=0.3) -> Digraph:
    n = rng.randint(n_min, n_max)
    arcs = set()
    for v in range(1, n):
        u = rng.randrange(v)
        arcs.add((u, v) if rng.random() < 0.5 else (v, u))
    for u in range(n):
        for v in range(n):
            if u != v and rng.random() < extra:
                arcs.add((u, v))
    return build_digraph(n, arcs)


def random_block_digraph(rng: random.Random, n_max=5) -> Digraph:
    """A random block: an induced block of a random connected digraph."""
    while True:
        d = random_connected_digraph(rng, 1, n_max, extra=0.45)
        decomp = blocks(d)
        blk = decomp.blocks[rng.randrange(len(decomp.blocks))]
        sub = d.induced(blk)
        if sub.n <= n_max:
            return sub


def random_cover(rng: random.Random, d: Digraph, r_max=3, density=0.7):
    fibres, nid = [], 0
    for _ in range(d.n):
        s = rng.randint(1, r_max)
        fibres.append(list(range(nid, nid + s)))
        nid += s
    harcs = []
    for (u, v) in d.arcs:
        xs, ys = fibres[u][:], fibres[v][:]
        rng.shuffle(xs)
        rng.shuffle(ys)
        m = rng.randint(0, min(len(xs), len(ys)))
        if rng.random() < density:
            harcs += list(zip(xs[:m], ys[:m]))
    return build_cover(d, fibres, harcs)


def random_configuration(rng: random.Random, n_max=6, r_max=3, tight=False,
                         f_cap=3) -> Configuration:
    """Random connected configuration; `tight` splits each vertex degree
    exactly across its fibre (the only candidates for uncolorability)."""
    d = random_connected_digraph(rng, 1, n_max)
    cov = random_cover(rng, d, r_max)
    f = {}
    for v in range(d.n):
        deg = d.degree(v)
        fib = cov.fibres[v]
        if tight:
            rem = [deg.plus, deg.minus]
            for i, x in enumerate(fib):
                if i == len(fib) - 1:
                    f[x] = (rem[0], rem[1])
                else:
                    a = rng.randint(0, rem[0])
                    b = rng.randint(0, rem[1])
                    f[x] = (a, b)
                    rem[0] -= a
                    rem[1] -= b
        else:
            for x in fib:
                f[x] = (rng.randint(0, f_cap), rng.randint(0, f_cap))
    return Configuration(cov, f)


def random_feasible_configuration(rng: random.Random, n_max=6, r_max=3) -> Configuration:
    """Rejection-sampled mix of loose and exactly-tight feasible configurations."""
    from dpdeg.config import is_degree_feasible
    while True:
        k = random_configuration(rng, n_max, r_max, tight=(rng.random() < 0.5))
        if is_degree_feasible(k)[0]:
            return k


# -- random constructible instances --------------------------------------------------

def _random_parts(rng: random.Random, total: int, max_parts: int):
    parts = []
    rem = total
    while rem and len(parts) < max_parts - 1:
        take = rng.randint(1, rem)
        parts.append(take)
        rem -= take
    if rem:
        parts.append(rem)
    return tuple(parts)


_FAMILY_MIN_ORDER = {"m": 1, "k": 2, "c-odd": 5, "c-even": 4, "a": 4}


def random_leaf_instance(rng: random.Random, max_order=8, family=None) -> Configuration:
    fits = [f for f, lo in _FAMILY_MIN_ORDER.items() if lo <= max_order]
    fam = family or rng.choice(fits)
    if fam == "m":
        d = random_block_digraph(rng, n_max=min(5, max_order))
        sizes = {v: rng.randint(1, 3) for v in range(d.n)}
        chosen = {v: rng.randrange(sizes[v]) for v in range(d.n)}
        return gen_m(d, sizes, chosen)
    if fam == "k":
        n = rng.randint(2, min(5, max_order))
        parts = _random_parts(rng, n - 1, 3)
        r = rng.randint(len(parts), 3)
        perms = {v: tuple(rng.sample(range(r), r)) for v in range(n)}
        return gen_k(n, parts, r, layer_perms=perms)
    if fam == "c-odd":
        n = rng.choice([x for x in (5, 7) if x <= max_order])
        twists = [rng.random() < 0.5 for _ in range(n)]
        if sum(twists) % 2:
            twists[-1] = not twists[-1]
        return gen_c(n, "odd", twists)
    if fam == "c-even":
        n = rng.choice([x for x in (4, 6, 8) if x <= max_order])
        twists = [rng.random() < 0.5 for _ in range(n)]
        if sum(twists) % 2 == 0:
            twists[-1] = not twists[-1]
        return gen_c(n, "even", twists)
    n = rng.choice([x for x in (4, 6, 8) if x <= max_order])
    twists = [rng.random() < 0.5 for _ in range(n)]
    if sum(twists) % 2 == 0:
        twists[-1] = not twists[-1]
    return gen_a(n, twists)


def _pad_fibre(k: Configuration, v: int, want: int) -> Configuration:
    while len(k.cover.fibres[v]) < want:
        k = augment_zero(k, vertex=(v, None))
    return k


def random_constructible_instance(rng: random.Random, max_order=8,
                                  merge_depth=0) -> Configuration:
    """A random constructible configuration; positive merge depth glues smaller
    instances at single vertices, padding fibres with isolated zero-budget
    colors when sizes disagree."""
    if merge_depth == 0 or max_order < 3:
        return random_leaf_instance(rng, max_order)
    left_order = rng.randint(2, max_order - 1)
    right_order = max_order - left_order + 1
    left = random_constructible_instance(rng, max(2, left_order),
                                         rng.randint(0, merge_depth - 1))
    right = random_constructible_instance(rng, max(2, right_order),
                                          rng.randint(0, merge_depth - 1))
    v1 = rng.randrange(left.cover.base.n)
    v2 = rng.randrange(right.cover.base.n)
    want = max(len(left.cover.fibres[v1]), len(right.cover.fibres[v2]))
    left = _pad_fibre(left, v1, want)
    right = _pad_fibre(right, v2, want)
    fib1 = list(left.cover.fibres[v1])
    fib2 = list(right.cover.fibres[v2])
    rng.shuffle(fib2)
    return merge(left, v1, right, v2, pi=dict(zip(fib1, fib2)))
