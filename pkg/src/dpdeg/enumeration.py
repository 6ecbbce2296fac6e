"""Small-digraph canonical forms and exhaustive enumeration up to isomorphism.

Canonicalization is exact (degree-pair refinement plus backtracking over the
residual vertex classes), intended for orders up to about 6 where the
acceptance sweeps live.
"""

from __future__ import annotations

from itertools import combinations, permutations, product

from .digraph import Digraph, build_digraph

# Pair states for an unordered vertex pair (u, v) with u < v:
# 0 none, 1 arc u->v, 2 arc v->u, 3 digon.
_FLIP = (0, 2, 1, 3)


def _refined_classes(d: Digraph) -> list[list[int]]:
    """Partition vertices by iterated degree refinement; classes sorted."""
    color = {v: (len(d.out_neighbors(v)), len(d.in_neighbors(v))) for v in range(d.n)}
    for _ in range(d.n):
        nxt = {}
        for v in range(d.n):
            outs = sorted(color[w] for w in d.out_neighbors(v))
            ins = sorted(color[w] for w in d.in_neighbors(v))
            nxt[v] = (color[v], tuple(outs), tuple(ins))
        # compress
        keys = sorted(set(nxt.values()))
        idx = {k: i for i, k in enumerate(keys)}
        new_color = {v: idx[nxt[v]] for v in range(d.n)}
        if new_color == color:
            break
        color = new_color
    classes: dict = {}
    for v in range(d.n):
        classes.setdefault(color[v], []).append(v)
    return [sorted(classes[k]) for k in sorted(classes)]


def canonical_key(d: Digraph):
    """A label-invariant canonical key: minimum encoded arc set over the
    relabelings consistent with the degree refinement."""
    n = d.n
    if n <= 1:
        return (n, d.arcs)
    classes = _refined_classes(d)
    pos = 0
    slots = []  # target positions per class, in class order
    for cls in classes:
        slots.append(list(range(pos, pos + len(cls))))
        pos += len(cls)
    best = None
    per_class = [permutations(s) for s in slots]
    for assignment in product(*per_class):
        perm = {}
        for cls, targets in zip(classes, assignment):
            for v, t in zip(cls, targets):
                perm[v] = t
        code = []
        for (u, v) in d.arcs:
            code.append((perm[u], perm[v]))
        key = tuple(sorted(code))
        if best is None or key < best:
            best = key
    return (n, best)


def are_isomorphic(a: Digraph, b: Digraph) -> bool:
    return a.n == b.n and len(a.arcs) == len(b.arcs) and canonical_key(a) == canonical_key(b)


def _perm_tables(n: int):
    """For each non-identity permutation: arrays (src index, flip flag) telling
    how a pair-state vector transforms under relabeling."""
    pairs = list(combinations(range(n), 2))
    index = {p: i for i, p in enumerate(pairs)}
    tables = []
    for perm in permutations(range(n)):
        if perm == tuple(range(n)):
            continue
        src = []
        flip = []
        for (u, v) in pairs:
            pu, pv = perm[u], perm[v]
            # state of target pair (u,v) comes from source pair (pu,pv)
            if pu < pv:
                src.append(index[(pu, pv)])
                flip.append(False)
            else:
                src.append(index[(pv, pu)])
                flip.append(True)
        tables.append((tuple(src), tuple(flip)))
    return pairs, tables


def all_digraphs(n: int, connected_only: bool = True):
    """Yield one representative per isomorphism class of digraphs of order n.

    Enumerates the 4^C(n,2) pair-state vectors and keeps exactly the vectors
    that are lexicographically minimal in their relabeling orbit; exact, and
    fast enough through n = 5.
    """
    if n == 0:
        yield build_digraph(0, [])
        return
    if n == 1:
        yield build_digraph(1, [])
        return
    pairs, tables = _perm_tables(n)
    npairs = len(pairs)
    flip_map = _FLIP
    for states in product((0, 1, 2, 3), repeat=npairs):
        canonical = True
        for src, flip in tables:
            for j in range(npairs):
                v = states[src[j]]
                if flip[j]:
                    v = flip_map[v]
                s = states[j]
                if v < s:
                    canonical = False
                    break
                if v > s:
                    break
            else:
                continue
            if not canonical:
                break
        if not canonical:
            continue
        arcs = []
        for (u, v), s in zip(pairs, states):
            if s & 1:
                arcs.append((u, v))
            if s & 2:
                arcs.append((v, u))
        d = build_digraph(n, arcs)
        if connected_only and not d.is_connected():
            continue
        yield d


def connected_digraphs_upto(n_max: int):
    """All connected digraphs with 1 <= |D| <= n_max, one per isomorphism class."""
    for n in range(1, n_max + 1):
        yield from all_digraphs(n, connected_only=True)
