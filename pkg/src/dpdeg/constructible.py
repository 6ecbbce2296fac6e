"""Configuration families, their generators, and certificate checking.

An uncolorable degree-feasible connected configuration is exactly one built
from five leaf families (M over any block, K over bidirected complete graphs,
odd/even C over bidirected cycles, A over antidirected cycles) by repeatedly
merging two configurations at a single vertex with budgets added fibre-wise.
A Certificate is the recursive witness of such a build; every node is
independently checkable against the family definitions.

Merge nodes are canonical: the left side is always the component of
D - vstar containing the smallest vertex id (plus vstar itself), so the split
need not be stored.  They carry the explicit budget split for the merged
fibre, which is what makes the additivity rule checkable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from . import digraph as dg
from .config import Configuration
from .cover import build_cover, check_transversal, restrict_to_vertices
from .digraph import Digraph, cut_vertices
from .errors import (BadOrder, BadParameter, BadParity, FibreSizeMismatch,
                     FormatError, MatchingViolation, NotABlock, NotConnected,
                     PartsSumMismatch, SaturationImpossible, SupportNotZero)

Pair = tuple[int, int]


# -- certificate tree ----------------------------------------------------------

@dataclass(frozen=True)
class MCert:
    colors: tuple[int, ...]  # the saturated transversal carrying f = d


@dataclass(frozen=True)
class KCert:
    n: int
    parts: tuple[int, ...]
    layers: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class OddCCert:
    n: int
    t1: tuple[int, ...]
    t2: tuple[int, ...]


@dataclass(frozen=True)
class EvenCCert:
    n: int
    t1: tuple[int, ...]
    t2: tuple[int, ...]


@dataclass(frozen=True)
class ACert:
    n: int
    t1: tuple[int, ...]
    t2: tuple[int, ...]


@dataclass(frozen=True)
class MergeCert:
    vstar: int  # vertex id in the configuration this node certifies
    v1: int     # id of the merged vertex inside the left sub-configuration
    v2: int     # id inside the right sub-configuration
    fsplit: tuple[tuple[int, int, int], ...]  # (color, out, in): left share
    left: "Certificate"
    right: "Certificate"


Certificate = MCert | KCert | OddCCert | EvenCCert | ACert | MergeCert


# -- structural helpers ----------------------------------------------------------

def is_block_digraph(d: Digraph) -> bool:
    """Connected with no separating vertex (single vertices and single arcs count)."""
    return d.n >= 1 and d.is_connected() and not cut_vertices(d)


def canonical_split(d: Digraph, vstar: int) -> tuple[list[int], list[int]]:
    """Split a connected digraph at a cut vertex: left side is the component of
    D - vstar containing the smallest vertex, plus vstar; right is the rest."""
    comps = d.delete_vertex(vstar).components()
    old = [u for u in range(d.n) if u != vstar]
    comp0 = {old[i] for i in comps[0]}
    left = sorted(comp0 | {vstar})
    right = sorted(set(range(d.n)) - comp0)
    return left, right


def _transversal_map(cfg: Configuration, colors) -> Optional[dict[int, int]]:
    kind, _ = check_transversal(cfg.cover, colors)
    if kind != "full":
        return None
    return {cfg.cover.owner[x]: x for x in colors}


def _f_matches(cfg: Configuration, expected: Mapping[int, Pair]) -> Optional[str]:
    for x in cfg.cover.h.vertices:
        want = expected.get(x, (0, 0))
        if cfg.f[x] != tuple(want):
            return f"f({x}) = {cfg.f[x]}, expected {tuple(want)}"
    return None


def _layer_saturated(cfg: Configuration, tmap: Mapping[int, int]) -> bool:
    """The 1-uniform subcover on a transversal is saturated: every base arc is
    realized between the chosen colors."""
    h = cfg.cover.h
    return all(h.has_arc(tmap[u], tmap[v]) for (u, v) in cfg.cover.base.arcs)


def _induced_bidirected_cycle(cfg: Configuration, colors: frozenset[int]) -> bool:
    h = cfg.cover.h
    for x in colors:
        if len(h.out[x] & colors) != 2 or (h.out[x] & colors) != (h.inn[x] & colors):
            return False
    return _single_ug_cycle(cfg, colors)


def _induced_antidirected_cycle(cfg: Configuration, colors: frozenset[int]) -> bool:
    h = cfg.cover.h
    for x in colors:
        od, idd = h.degree_in(x, colors)
        if (od, idd) not in ((2, 0), (0, 2)):
            return False
    return _single_ug_cycle(cfg, colors)


def _single_ug_cycle(cfg: Configuration, colors: frozenset[int]) -> bool:
    comps = cfg.cover.h.induced(colors).ug_components()
    return len(comps) == 1 and comps[0] == colors


# -- certificate verification ---------------------------------------------------

def check_certificate(cfg: Configuration, cert: Certificate) -> tuple[bool, str]:
    """Structural check of a certificate against a configuration.

    Every leaf is compared with its family definition; every merge is checked
    for the canonical split, the budget-additivity rule and strict shrinking.
    """
    d = cfg.cover.base
    if isinstance(cert, MCert):
        if not is_block_digraph(d):
            return False, "M: base is not a block"
        tmap = _transversal_map(cfg, cert.colors)
        if tmap is None:
            return False, "M: colors are not a transversal"
        if not _layer_saturated(cfg, tmap):
            return False, "M: restricted cover is not saturated"
        expected = {x: tuple(d.degree(v)) for v, x in tmap.items()}
        bad = _f_matches(cfg, expected)
        return (False, f"M: {bad}") if bad else (True, "")
    if isinstance(cert, KCert):
        tag = dg.classify(d)
        if tag.kind != dg.BIDIRECTED_COMPLETE or tag.n != cert.n or cert.n != d.n or cert.n < 2:
            return False, "K: base is not the stated bidirected complete graph"
        if len(cert.parts) != len(cert.layers) or not cert.parts:
            return False, "K: parts/layers mismatch"
        if any(p < 1 for p in cert.parts) or sum(cert.parts) != cert.n - 1:
            return False, "K: parts must be positive and sum to n - 1"
        seen: set[int] = set()
        expected: dict[int, Pair] = {}
        for part, layer in zip(cert.parts, cert.layers):
            tmap = _transversal_map(cfg, layer)
            if tmap is None or seen & set(layer):
                return False, "K: layers must be disjoint transversals"
            seen |= set(layer)
            if not _layer_saturated(cfg, tmap):
                return False, "K: a layer is not saturated"
            for x in layer:
                expected[x] = (part, part)
        bad = _f_matches(cfg, expected)
        return (False, f"K: {bad}") if bad else (True, "")
    if isinstance(cert, (OddCCert, EvenCCert)):
        tag = dg.classify(d)
        if tag.kind != dg.BIDIRECTED_CYCLE or tag.n != cert.n or cert.n != d.n:
            return False, "C: base is not the stated bidirected cycle"
        if isinstance(cert, OddCCert) and (cert.n < 5 or cert.n % 2 == 0):
            return False, "C: odd family needs odd order >= 5"
        if isinstance(cert, EvenCCert) and (cert.n < 4 or cert.n % 2):
            return False, "C: even family needs even order >= 4"
        m1 = _transversal_map(cfg, cert.t1)
        m2 = _transversal_map(cfg, cert.t2)
        if m1 is None or m2 is None or set(cert.t1) & set(cert.t2):
            return False, "C: layers must be disjoint transversals"
        if isinstance(cert, OddCCert):
            if not (_layer_saturated(cfg, m1) and _layer_saturated(cfg, m2)):
                return False, "C: a layer is not saturated"
        else:
            union = frozenset(cert.t1) | frozenset(cert.t2)
            if not _induced_bidirected_cycle(cfg, union):
                return False, "C: layers do not interleave into one bidirected cycle"
        expected = {x: (1, 1) for x in set(cert.t1) | set(cert.t2)}
        bad = _f_matches(cfg, expected)
        return (False, f"C: {bad}") if bad else (True, "")
    if isinstance(cert, ACert):
        tag = dg.classify(d)
        if tag.kind != dg.ANTIDIRECTED_CYCLE or tag.n != cert.n or cert.n != d.n:
            return False, "A: base is not the stated antidirected cycle"
        m1 = _transversal_map(cfg, cert.t1)
        m2 = _transversal_map(cfg, cert.t2)
        if m1 is None or m2 is None or set(cert.t1) & set(cert.t2):
            return False, "A: layers must be disjoint transversals"
        union = frozenset(cert.t1) | frozenset(cert.t2)
        if not _induced_antidirected_cycle(cfg, union):
            return False, "A: layers do not form one antidirected cycle of twice the order"
        expected = {}
        for x in union:
            v = cfg.cover.owner[x]
            expected[x] = (1, 0) if len(d.in_neighbors(v)) == 0 else (0, 1)
        bad = _f_matches(cfg, expected)
        return (False, f"A: {bad}") if bad else (True, "")
    if isinstance(cert, MergeCert):
        if not d.is_connected():
            return False, "merge: base is disconnected"
        if cert.vstar not in set(cut_vertices(d)):
            return False, f"merge: {cert.vstar} is not a cut vertex"
        left, right = canonical_split(d, cert.vstar)
        if len(left) >= d.n or len(right) >= d.n:
            return False, "merge: sides must be strictly smaller"
        if cert.v1 != left.index(cert.vstar) or cert.v2 != right.index(cert.vstar):
            return False, "merge: stated merged-vertex ids do not match the canonical split"
        fs = {x: (p, m) for (x, p, m) in cert.fsplit}
        star_fibre = cfg.cover.fibres[cert.vstar]
        if set(fs) != set(star_fibre):
            return False, "merge: budget split must cover exactly the merged fibre"
        for x in star_fibre:
            fx = cfg.f[x]
            if not (0 <= fs[x][0] <= fx[0] and 0 <= fs[x][1] <= fx[1]):
                return False, "merge: budget split exceeds f on the merged fibre"
        sub_l = _sub_configuration(cfg, left, cert.vstar, fs, left_side=True)
        sub_r = _sub_configuration(cfg, right, cert.vstar, fs, left_side=False)
        ok, why = check_certificate(sub_l, cert.left)
        if not ok:
            return False, f"merge/left: {why}"
        ok, why = check_certificate(sub_r, cert.right)
        if not ok:
            return False, f"merge/right: {why}"
        return True, ""
    return False, f"unknown certificate node {cert!r}"


def _sub_configuration(cfg: Configuration, verts: Sequence[int], vstar: int,
                       fsplit: Mapping[int, Pair], left_side: bool) -> Configuration:
    cov = restrict_to_vertices(cfg.cover, verts)
    f = {}
    for x in cov.h.vertices:
        if cfg.cover.owner[x] == vstar:
            share = fsplit[x]
            if left_side:
                f[x] = share
            else:
                fx = cfg.f[x]
                f[x] = (fx[0] - share[0], fx[1] - share[1])
        else:
            f[x] = cfg.f[x]
    return Configuration(cov, f)


# -- generators -----------------------------------------------------------------

def gen_m(d: Digraph, fibre_sizes, chosen=None, extra_harcs=()) -> Configuration:
    """An M-configuration over a block: one chosen color per vertex carries the
    full degree budget and those colors are pairwise matched along every arc;
    everything else has budget (0,0)."""
    if not is_block_digraph(d):
        raise NotABlock("the base of an M-configuration must be a block")
    if isinstance(fibre_sizes, int):
        sizes = [fibre_sizes] * d.n
    else:
        sizes = [fibre_sizes[v] for v in range(d.n)]
    if any(s < 1 for s in sizes):
        raise SaturationImpossible("every fibre needs at least one color")
    chosen = chosen or {}
    start = []
    acc = 0
    for s in sizes:
        start.append(acc)
        acc += s
    t = []
    for v in range(d.n):
        idx = chosen.get(v, 0)
        if not 0 <= idx < sizes[v]:
            raise SaturationImpossible(f"chosen index {idx} outside fibre of {v}")
        t.append(start[v] + idx)
    tset = set(t)
    for (x, y) in extra_harcs:
        if x in tset or y in tset:
            raise SaturationImpossible("extra cover arcs may not touch the chosen transversal")
    harcs = [(t[u], t[v]) for (u, v) in d.arcs] + list(extra_harcs)
    fibres = [range(start[v], start[v] + sizes[v]) for v in range(d.n)]
    cov = build_cover(d, fibres, harcs)
    f = {x: (0, 0) for x in cov.h.vertices}
    for v in range(d.n):
        f[t[v]] = tuple(d.degree(v))
    return Configuration(cov, f)


def gen_k(n: int, parts: Sequence[int], r: int, layer_perms=None) -> Configuration:
    """A K-configuration: r-uniform cover of the bidirected complete graph with
    p disjoint saturated layers carrying symmetric budgets (n_i, n_i)."""
    if n < 2:
        raise PartsSumMismatch("the complete family needs order >= 2")
    parts = tuple(parts)
    if not parts or any(p < 1 for p in parts) or sum(parts) != n - 1:
        raise PartsSumMismatch(f"parts {parts} must be positive and sum to {n - 1}")
    if r < len(parts):
        raise BadParameter(f"fibre size {r} cannot hold {len(parts)} disjoint layers")
    layer_perms = layer_perms or {}
    d = dg.bidirected_complete(n)
    perm = [tuple(layer_perms.get(v, range(r))) for v in range(n)]
    for v in range(n):
        if sorted(perm[v]) != list(range(r)):
            raise BadParameter(f"layer permutation at {v} is not a permutation of 0..{r - 1}")
    color = lambda v, slot: v * r + slot
    harcs = []
    for i in range(len(parts)):
        for (u, v) in d.arcs:
            harcs.append((color(u, perm[u][i]), color(v, perm[v][i])))
    cov = build_cover(d, [range(v * r, (v + 1) * r) for v in range(n)], harcs)
    f = {x: (0, 0) for x in cov.h.vertices}
    for i, ni in enumerate(parts):
        for v in range(n):
            f[color(v, perm[v][i])] = (ni, ni)
    return Configuration(cov, f)


def gen_c(n: int, parity: str, twists: Optional[Sequence[bool]] = None) -> Configuration:
    """A C-configuration over the bidirected n-cycle, 2-uniform with budget (1,1)
    everywhere.  Per-edge twists swap the two layer slots; their total parity
    decides whether the layers close as two disjoint cycles (odd family) or as
    one doubled cycle (even family)."""
    if parity == "odd":
        if n < 5 or n % 2 == 0:
            raise BadParity(f"odd C-configurations need odd order >= 5, got {n}")
    elif parity == "even":
        if n < 4 or n % 2:
            raise BadParity(f"even C-configurations need even order >= 4, got {n}")
    else:
        raise BadParity(f"parity must be 'odd' or 'even', got {parity!r}")
    if twists is None:
        twists = [False] * n
        if parity == "even":
            twists[-1] = True
    twists = [bool(b) for b in twists]
    if len(twists) != n:
        raise BadParity(f"need one twist flag per edge ({n}), got {len(twists)}")
    want_odd_swaps = (parity == "even")
    if (sum(twists) % 2 == 1) != want_odd_swaps:
        raise BadParity("twist parity does not close the layers for this family: "
                        "the odd family needs an even number of swaps, the even family an odd number")
    d = dg.bidirected_cycle(n)
    harcs = []
    for i in range(n):
        j = (i + 1) % n
        for a in (0, 1):
            b = a ^ twists[i]
            harcs.append((2 * i + a, 2 * j + b))
            harcs.append((2 * j + b, 2 * i + a))
    cov = build_cover(d, [(2 * v, 2 * v + 1) for v in range(n)], harcs)
    return Configuration(cov, {x: (1, 1) for x in cov.h.vertices})


def gen_a(n: int, twists: Optional[Sequence[bool]] = None) -> Configuration:
    """An A-configuration over the antidirected n-cycle: source colors carry
    (1,0), sink colors (0,1), and the doubled antidirected cycle closes with an
    odd number of twists."""
    if n < 4 or n % 2:
        raise BadOrder(f"A-configurations need even order >= 4, got {n}")
    if twists is None:
        twists = [False] * (n - 1) + [True]
    twists = [bool(b) for b in twists]
    if len(twists) != n:
        raise BadOrder(f"need one twist flag per edge ({n}), got {len(twists)}")
    if sum(twists) % 2 != 1:
        raise BadOrder("twist parity must be odd so the doubled cycle closes in one piece")
    d = dg.antidirected_cycle(n)
    harcs = []
    for i in range(n):
        j = (i + 1) % n
        src, dst = (i, j) if i % 2 == 0 else (j, i)
        for a in (0, 1):
            b = a ^ twists[i]
            if src == i:
                harcs.append((2 * i + a, 2 * j + b))
            else:
                harcs.append((2 * j + b, 2 * i + a))
    cov = build_cover(d, [(2 * v, 2 * v + 1) for v in range(n)], harcs)
    f = {}
    for v in range(n):
        budget = (1, 0) if v % 2 == 0 else (0, 1)
        f[2 * v] = budget
        f[2 * v + 1] = budget
    return Configuration(cov, f)


def merge(k1: Configuration, v1: int, k2: Configuration, v2: int,
          pi: Optional[Mapping[int, int]] = None) -> Configuration:
    """Glue two configurations at one vertex: fibres identified along pi,
    budgets added on the merged fibre.  The merged vertex keeps id v1; the
    second configuration's other vertices and colors are appended."""
    fib1 = k1.cover.fibres[v1]
    fib2 = k2.cover.fibres[v2]
    if len(fib1) != len(fib2):
        raise FibreSizeMismatch(f"fibres of sizes {len(fib1)} and {len(fib2)} cannot be identified")
    if pi is None:
        pi = dict(zip(fib1, fib2))
    else:
        pi = dict(pi)
        if sorted(pi) != sorted(fib1) or sorted(pi.values()) != sorted(fib2):
            raise FibreSizeMismatch("pi must be a bijection between the two fibres")
    inv = {y: x for x, y in pi.items()}
    n1 = k1.cover.base.n
    vmap2 = {}
    nxt = n1
    for w in range(k2.cover.base.n):
        if w == v2:
            vmap2[w] = v1
        else:
            vmap2[w] = nxt
            nxt += 1
    offset = max(list(k1.cover.h.vertices) + list(k2.cover.h.vertices), default=-1) + 1
    cmap2 = {}
    for x in k2.cover.h.vertices:
        cmap2[x] = inv[x] if x in inv else offset + x
    arcs = list(k1.cover.base.arcs)
    arcs += [(vmap2[u], vmap2[v]) for (u, v) in k2.cover.base.arcs]
    base = dg.build_digraph(nxt, arcs)
    fibres = [list(k1.cover.fibres[v]) for v in range(n1)]
    fibres += [[] for _ in range(nxt - n1)]
    for w in range(k2.cover.base.n):
        if w != v2:
            fibres[vmap2[w]] = [cmap2[x] for x in k2.cover.fibres[w]]
    harcs = list(k1.cover.h.arcs)
    harcs += [(cmap2[x], cmap2[y]) for (x, y) in k2.cover.h.arcs]
    cov = build_cover(base, fibres, harcs)
    f = dict(k1.f)
    for x, fx in k2.f.items():
        y = cmap2[x]
        if y in f:
            f[y] = (f[y][0] + fx[0], f[y][1] + fx[1])
        else:
            f[y] = fx
    return Configuration(cov, f)


def augment_zero(k: Configuration, arc: Optional[tuple[int, int]] = None,
                 vertex: Optional[tuple[int, Optional[int]]] = None) -> Configuration:
    """Constructibility-preserving augmentation: add a cover arc between two
    budget-(0,0) colors over a base arc, or add a fresh isolated (0,0) color."""
    cov = k.cover
    if (arc is None) == (vertex is None):
        raise BadParameter("pass exactly one of arc=(x, y) or vertex=(v, new_color)")
    if arc is not None:
        x, y = arc
        if k.f[x] != (0, 0) or k.f[y] != (0, 0):
            raise SupportNotZero("both endpoints must have budget (0,0)")
        u, v = cov.owner[x], cov.owner[y]
        if not cov.base.has_arc(u, v):
            raise MatchingViolation(f"({u}, {v}) is not a base arc")
        if cov.out_partner(x, v) is not None or cov.in_partner(y, u) is not None:
            raise MatchingViolation("adding this arc would break the matching condition")
        new_cov = build_cover(cov.base, cov.fibres, list(cov.h.arcs) + [(x, y)])
        return Configuration(new_cov, k.f)
    v, new_color = vertex
    if new_color is None:
        new_color = max(cov.h.vertices, default=-1) + 1
    if new_color in cov.h.vertices:
        raise BadParameter(f"color id {new_color} already in use")
    fibres = [list(cov.fibres[u]) for u in range(cov.base.n)]
    fibres[v].append(new_color)
    new_cov = build_cover(cov.base, fibres, cov.h.arcs)
    f = dict(k.f)
    f[new_color] = (0, 0)
    return Configuration(new_cov, f)


def recognize(k: Configuration) -> Optional[Certificate]:
    """A verifying certificate if the configuration is constructible, else None.

    Constructible configurations have budget sums exactly equal to the base
    degrees, so anything else is rejected immediately; the rest is decided by
    the color-or-certify engine.
    """
    if not k.cover.base.is_connected():
        raise NotConnected("recognition needs a connected base")
    d = k.cover.base
    for v in range(d.n):
        if tuple(k.f_sum(v)) != tuple(d.degree(v)):
            return None
    if any(not fib for fib in k.cover.fibres):
        return None  # no transversal can exist, and no family tolerates that
    from .solver import solve, Constructible
    verdict = solve(k)
    return verdict.certificate if isinstance(verdict, Constructible) else None


# -- s-expression form -----------------------------------------------------------

def cert_to_sexp(cert: Certificate) -> str:
    def seq(xs):
        return "(" + " ".join(str(x) for x in xs) + ")"
    if isinstance(cert, MCert):
        return f"(M T={seq(cert.colors)})"
    if isinstance(cert, KCert):
        layers = " ".join(f"T{i + 1}={seq(t)}" for i, t in enumerate(cert.layers))
        return f"(K n={cert.n} parts={seq(cert.parts)} {layers})"
    if isinstance(cert, OddCCert):
        return f"(c-odd n={cert.n} T1={seq(cert.t1)} T2={seq(cert.t2)})"
    if isinstance(cert, EvenCCert):
        return f"(c-even n={cert.n} T1={seq(cert.t1)} T2={seq(cert.t2)})"
    if isinstance(cert, ACert):
        return f"(A n={cert.n} T1={seq(cert.t1)} T2={seq(cert.t2)})"
    if isinstance(cert, MergeCert):
        fs = " ".join(seq(entry) for entry in cert.fsplit)
        return (f"(merge vstar={cert.vstar} v1={cert.v1} v2={cert.v2} "
                f"fsplit=({fs}) {cert_to_sexp(cert.left)} {cert_to_sexp(cert.right)})")
    raise FormatError(f"unknown certificate node {cert!r}")


def _tokenize(text: str):
    return text.replace("(", " ( ").replace(")", " ) ").split()


def _read(tokens, i):
    if tokens[i] != "(":
        raise FormatError(f"expected '(' at token {i}")
    items = []
    i += 1
    while tokens[i] != ")":
        if tokens[i] == "(":
            node, i = _read(tokens, i)
            items.append(node)
        else:
            items.append(tokens[i])
            i += 1
    return items, i + 1


def _kv(items):
    pos, kv = [], {}
    j = 0
    while j < len(items):
        it = items[j]
        if isinstance(it, str) and "=" in it:
            key, _, val = it.partition("=")
            if val == "" and j + 1 < len(items) and isinstance(items[j + 1], list):
                kv[key] = items[j + 1]
                j += 2
                continue
            kv[key] = val
        else:
            pos.append(it)
        j += 1
    return pos, kv


def _ints(node):
    return tuple(int(t) for t in node)


def cert_from_sexp(text: str) -> Certificate:
    tree, end = _read(_tokenize(text), 0)
    return _cert_from_tree(tree)


def _cert_from_tree(items) -> Certificate:
    head = items[0]
    pos, kv = _kv(items[1:])
    if head == "M":
        return MCert(_ints(kv["T"]))
    if head == "K":
        layers = tuple(_ints(kv[f"T{i + 1}"]) for i in range(len(_ints(kv["parts"]))))
        return KCert(int(kv["n"]), _ints(kv["parts"]), layers)
    if head == "c-odd":
        return OddCCert(int(kv["n"]), _ints(kv["T1"]), _ints(kv["T2"]))
    if head == "c-even":
        return EvenCCert(int(kv["n"]), _ints(kv["T1"]), _ints(kv["T2"]))
    if head == "A":
        return ACert(int(kv["n"]), _ints(kv["T1"]), _ints(kv["T2"]))
    if head == "merge":
        fsplit = tuple((int(e[0]), int(e[1]), int(e[2])) for e in kv["fsplit"])
        left = _cert_from_tree(pos[0])
        right = _cert_from_tree(pos[1])
        return MergeCert(int(kv["vstar"]), int(kv["v1"]), int(kv["v2"]),
                         fsplit, left, right)
    raise FormatError(f"unknown certificate head {head!r}")
