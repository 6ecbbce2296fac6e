"""Exact small-scale coloring parameters, critical digraphs and covers, and
the low-vertex block-structure harness.

Three parameters are computed for a reliable property P: the least number of
colors so each class induces a member of P (plain), the least list size that
always admits such a coloring (list), and the least fibre size so every cover
admits a P-transversal (dp).  All three are exact within hard scale caps and
raise ScaleCapExceeded beyond them.

Enumeration symmetries: list assignments are enumerated as multisets of
color-incidence vertex sets (color names are interchangeable); dp covers are
enumerated saturated and uniform with spanning-tree matchings gauge-fixed to
the identity (sound for monotone properties: saturating a cover preserves the
absence of a transversal).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from . import digraph as dg
from .cover import Cover, build_cover, restrict_to_vertices
from .digraph import DegreePair, Digraph, FamilyTag
from .errors import (NotCritical, NotListAssociated, PropertyNotEligible,
                     ScaleCapExceeded)
from .properties import DigraphProperty, compute_d, in_CR

PLAIN_CAP = 8
LIST_CAP = 5
DP_CAP_N = 4
DP_CAP_K = 3
DP_COVER_BUDGET = 300_000


# -- membership on induced subsets -------------------------------------------------

def _member_on(d: Digraph, p: DigraphProperty, verts) -> bool:
    return p.member(d.induced(verts))


def _class_checker(d: Digraph, p: DigraphProperty):
    cache: dict[frozenset, bool] = {}

    def ok(verts) -> bool:
        key = frozenset(verts)
        hit = cache.get(key)
        if hit is None:
            hit = _member_on(d, p, key)
            cache[key] = hit
        return hit

    return ok


# -- plain parameter ----------------------------------------------------------------

def _chi_plain(d: Digraph, p: DigraphProperty) -> int:
    """Fewest P-classes partitioning V(D), by subset dynamic programming."""
    n = d.n
    if n == 0:
        return 0
    if n > PLAIN_CAP:
        raise ScaleCapExceeded(f"plain variant capped at order {PLAIN_CAP}")
    ok = _class_checker(d, p)
    member = {}

    def mask_ok(mask: int) -> bool:
        hit = member.get(mask)
        if hit is None:
            hit = ok([v for v in range(n) if mask >> v & 1])
            member[mask] = hit
        return hit

    full = (1 << n) - 1
    best = [n + 1] * (full + 1)
    best[0] = 0
    for mask in range(1, full + 1):
        low = (mask & -mask).bit_length() - 1
        sub = mask
        while sub:
            if sub >> low & 1 and mask_ok(sub):
                cand = best[mask ^ sub] + 1
                if cand < best[mask]:
                    best[mask] = cand
            sub = (sub - 1) & mask
    return best[full]


# -- list parameter -----------------------------------------------------------------

def _k_list_patterns(n: int, k: int):
    """All k-list assignments up to color renaming, as multisets of incidence
    sets: each color is identified with the set of vertices carrying it."""
    start: tuple = ()
    states = {start}
    for v in range(n):
        nxt = set()
        for state in states:
            distinct = list(state)  # (vertices_tuple, count)
            ranges = [range(min(c, k) + 1) for (_, c) in distinct]
            for picks in itertools.product(*ranges):
                t = sum(picks)
                if t > k:
                    continue
                fresh = k - t
                bag: dict[tuple, int] = {}
                for ((vs, c), j) in zip(distinct, picks):
                    if c - j:
                        bag[vs] = bag.get(vs, 0) + (c - j)
                    if j:
                        grown = tuple(sorted(vs + (v,)))
                        bag[grown] = bag.get(grown, 0) + j
                if fresh:
                    solo = (v,)
                    bag[solo] = bag.get(solo, 0) + fresh
                nxt.add(tuple(sorted(bag.items())))
        states = nxt
    return states


def _pattern_colorable(d: Digraph, p: DigraphProperty, pattern) -> bool:
    colors: list[tuple] = []
    for (vs, c) in pattern:
        colors.extend([vs] * c)
    lists = [[ci for ci, vs in enumerate(colors) if v in vs] for v in range(d.n)]
    ok = _class_checker(d, p)
    classes: list[set] = [set() for _ in colors]

    def go(v: int) -> bool:
        if v == d.n:
            return True
        for ci in lists[v]:
            classes[ci].add(v)
            if ok(classes[ci]) and go(v + 1):
                return True
            classes[ci].discard(v)
        return False

    return go(0)


def _chi_list_at_most(d: Digraph, p: DigraphProperty, k: int) -> bool:
    if d.n == 0:
        return True
    if k == 0:
        return False
    if d.n > LIST_CAP:
        raise ScaleCapExceeded(f"list variant capped at order {LIST_CAP}")
    for pattern in _k_list_patterns(d.n, k):
        if not _pattern_colorable(d, p, pattern):
            return False
    return True


# -- dp parameter -------------------------------------------------------------------

def _gauge_arcs(d: Digraph) -> tuple[list, list]:
    """One arc per spanning-tree edge gets the identity matching; the others
    range freely (per-fibre color permutations are exactly this freedom)."""
    seen = {0} if d.n else set()
    tree_edges = set()
    frontier = [0] if d.n else []
    while frontier:
        u = frontier.pop()
        for w in d.ug_neighbors(u):
            if w not in seen:
                seen.add(w)
                tree_edges.add((min(u, w), max(u, w)))
                frontier.append(w)
    fixed, used = [], set()
    free = []
    for (u, v) in d.arcs:
        e = (min(u, v), max(u, v))
        if e in tree_edges and e not in used:
            fixed.append((u, v))
            used.add(e)
        else:
            free.append((u, v))
    return fixed, free


def saturated_uniform_covers(d: Digraph, k: int, budget: int = DP_COVER_BUDGET):
    """All saturated k-uniform covers up to per-fibre color permutations."""
    fixed, free = _gauge_arcs(d)
    total = 1
    for _ in free:
        total *= _factorial(k)
        if total > budget:
            raise ScaleCapExceeded(f"cover enumeration needs {total}+ cases (budget {budget})")
    fibres = [tuple(range(v * k, (v + 1) * k)) for v in range(d.n)]
    perms = list(itertools.permutations(range(k)))
    for combo in itertools.product(perms, repeat=len(free)):
        harcs = []
        for (u, v) in fixed:
            harcs += [(u * k + i, v * k + i) for i in range(k)]
        for (u, v), pi in zip(free, combo):
            harcs += [(u * k + i, v * k + pi[i]) for i in range(k)]
        yield build_cover(d, fibres, harcs)


def _factorial(k: int) -> int:
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def _has_p_transversal(cov: Cover, p: DigraphProperty) -> bool:
    for combo in itertools.product(*cov.fibres):
        sub, _ = cov.h.induced(combo).to_digraph()
        if p.member(sub):
            return True
    return False


def _chi_dp_at_most(d: Digraph, p: DigraphProperty, k: int) -> bool:
    if not p.monotone:
        raise PropertyNotEligible(
            "the dp variant enumerates saturated covers, which is only sound for "
            "monotone (strongly reliable) properties")
    if d.n == 0:
        return True
    if k == 0:
        return False
    if d.n > DP_CAP_N or k > DP_CAP_K:
        raise ScaleCapExceeded(f"dp variant capped at order {DP_CAP_N}, fibre size {DP_CAP_K}")
    for cov in saturated_uniform_covers(d, k):
        if not _has_p_transversal(cov, p):
            return False
    return True


# -- public parameter API ------------------------------------------------------------

def chi_at_most(d: Digraph, p: DigraphProperty, variant: str, k: int) -> bool:
    if variant == "plain":
        return _chi_plain(d, p) <= k
    if variant == "list":
        return _chi_list_at_most(d, p, k)
    if variant == "dp":
        return _chi_dp_at_most(d, p, k)
    raise PropertyNotEligible(f"unknown variant {variant!r}")


def chi(d: Digraph, p: DigraphProperty, variant: str = "plain") -> int:
    """Exact parameter value by upward scan from the plain lower bound."""
    if d.n == 0:
        return 0
    if variant == "plain":
        return _chi_plain(d, p)
    lo = _chi_plain(d, p) if d.n <= PLAIN_CAP else 1
    for k in range(lo, 2 * d.n + 1):
        if chi_at_most(d, p, variant, k):
            return k
    raise ScaleCapExceeded("parameter exceeds the guaranteed 2|D| bound?")


def is_critical(d: Digraph, p: DigraphProperty, variant: str = "plain") -> bool:
    """Every vertex-deleted subdigraph has a smaller parameter (monotonicity
    over induced subdigraphs makes single deletions sufficient)."""
    if d.n == 0:
        return False
    value = chi(d, p, variant)
    return all(chi(d.delete_vertex(v), p, variant) < value for v in range(d.n))


def critical_subdigraph(d: Digraph, p: DigraphProperty, variant: str = "plain") -> Digraph:
    """A minimum-order induced subdigraph with the same parameter value."""
    value = chi(d, p, variant)
    for size in range(d.n + 1):
        for verts in itertools.combinations(range(d.n), size):
            sub = d.induced(verts)
            if chi(sub, p, variant) == value:
                return sub
    return d


# -- critical covers -----------------------------------------------------------------

def _cover_is_critical(cov: Cover, p: DigraphProperty) -> bool:
    if _has_p_transversal(cov, p):
        return False
    d = cov.base
    for v in range(d.n):
        rest = [u for u in range(d.n) if u != v]
        sub = restrict_to_vertices(cov, rest)
        if not _has_p_transversal(sub, p):
            return False
    return True


def _one_uniform_covers(d: Digraph, budget: int = DP_COVER_BUDGET):
    m = len(d.arcs)
    if 2 ** m > budget:
        raise ScaleCapExceeded(f"2^{m} one-uniform covers exceed the budget")
    fibres = [(v,) for v in range(d.n)]
    for keep in itertools.product((False, True), repeat=m):
        harcs = [(u, v) for (u, v), kp in zip(d.arcs, keep) if kp]
        yield build_cover(d, fibres, harcs)


def find_critical_cover(d: Digraph, p: DigraphProperty, k: int) -> Optional[Cover]:
    """First k-uniform cover with no P-transversal but a (P,v)-transversal for
    every vertex.  Fibre size 1 searches all covers; larger sizes search the
    saturated ones up to per-fibre permutations."""
    if d.n == 0 or k < 1:
        return None
    if d.n > DP_CAP_N or k > DP_CAP_K:
        raise ScaleCapExceeded(f"critical-cover search capped at order {DP_CAP_N}, k {DP_CAP_K}")
    covers = _one_uniform_covers(d) if k == 1 else saturated_uniform_covers(d, k)
    for cov in covers:
        if _cover_is_critical(cov, p):
            return cov
    return None


# -- low vertices and block structure -------------------------------------------------

@dataclass
class CriticalCoverReport:
    cover: Cover
    low_flags: tuple[bool, ...]
    low_vertices: tuple[int, ...]
    low_blocks: tuple[tuple[int, ...], ...]
    block_tags: tuple[FamilyTag, ...]
    violations: tuple[str, ...]


def _d_threshold(p: DigraphProperty) -> DegreePair:
    if p.d_value is not None:
        return p.d_value
    value, _ = compute_d(p)
    return value


def low_vertices(d: Digraph, cov: Cover, p: DigraphProperty) -> CriticalCoverReport:
    """Lowness flags (degree equals threshold times fibre size), the low-vertex
    subdigraph, and the family tag of each of its blocks."""
    thr = _d_threshold(p)
    flags = tuple(tuple(d.degree(v)) == tuple(thr * len(cov.fibres[v]))
                  for v in range(d.n))
    low = tuple(v for v in range(d.n) if flags[v])
    sub = d.induced(low)
    decomp = dg.blocks(sub)
    low_blocks = []
    tags = []
    for blk in decomp.blocks:
        orig = tuple(low[i] for i in blk)
        low_blocks.append(orig)
        tags.append(dg.classify(sub.induced(blk)))
    return CriticalCoverReport(cov, flags, low, tuple(low_blocks), tuple(tags), ())


def is_dibrick(b: Digraph, p: DigraphProperty) -> tuple[bool, Optional[str]]:
    """Connected digraphs allowed as low blocks in both the dp and list settings:
    bidirected complete graphs, odd bidirected cycles, members of P with all
    degrees at most the threshold, and threshold-diregular CR members."""
    if not b.is_connected() or b.n == 0:
        return False, None
    tag = dg.classify(b)
    if tag.kind == dg.BIDIRECTED_COMPLETE:
        return True, "bidirected-complete"
    if tag.kind == dg.BIDIRECTED_CYCLE and tag.n % 2 == 1:
        return True, "odd-bidirected-cycle"
    thr = _d_threshold(p)
    _, dmax, _ = dg.degree_profile(b)
    if p.member(b) and dmax <= thr:
        return True, "small-member"
    if thr.plus == thr.minus:
        eul, r = dg.eulerian_diregular(b)
        if eul and r == thr.plus and in_CR(p, b):
            return True, "diregular-cr-member"
    return False, None


def is_list_associated(cov: Cover) -> bool:
    """Whether colors can be renamed so every matching is a partial identity:
    the matched-pair components must hit each fibre at most once and be fully
    arc-connected over every base arc they span."""
    comp_of: dict[int, int] = {}
    for i, comp in enumerate(cov.h.ug_components()):
        for x in comp:
            comp_of[x] = i
    groups: dict[int, list[int]] = {}
    for x in cov.h.vertices:
        groups.setdefault(comp_of[x], []).append(x)
    for comp in groups.values():
        owners = [cov.owner[x] for x in comp]
        if len(set(owners)) != len(owners):
            return False
        vert_of = {cov.owner[x]: x for x in comp}
        for (u, v) in cov.base.arcs:
            if u in vert_of and v in vert_of:
                if not cov.h.has_arc(vert_of[u], vert_of[v]):
                    return False
    return True


def check_block_structure(d: Digraph, cov: Cover, p: DigraphProperty,
                          mode: str = "dp") -> CriticalCoverReport:
    """Check every block of the low-vertex subdigraph of a critical cover
    against the allowed families; dp mode additionally admits even bidirected
    cycles and antidirected cycles."""
    if not _cover_is_critical(cov, p):
        raise NotCritical("the cover is not critical for this property")
    if mode == "list" and not is_list_associated(cov):
        raise NotListAssociated("the cover is not associated with a list assignment")
    if mode not in ("dp", "list"):
        raise PropertyNotEligible(f"unknown mode {mode!r}")
    report = low_vertices(d, cov, p)
    violations = []
    for verts, tag in zip(report.low_blocks, report.block_tags):
        block = d.induced(verts)
        brick, _ = is_dibrick(block, p)
        allowed = brick
        if mode == "dp" and not allowed:
            allowed = (tag.kind == dg.BIDIRECTED_CYCLE and tag.n % 2 == 0) \
                or tag.kind == dg.ANTIDIRECTED_CYCLE
        if not allowed:
            violations.append(f"block {verts} with tag {tag.kind}({tag.n}) is not allowed in {mode} mode")
    report.violations = tuple(violations)
    return report


# -- Brooks-type classification --------------------------------------------------------

@dataclass(frozen=True)
class BrooksClassification:
    bound: int
    exceptional: Optional[str]  # "k1" | "cr-diregular" | "bidirected-complete" | "bidirected-cycle"


def brooks_classify(d: Digraph, p: DigraphProperty) -> BrooksClassification:
    """The ceiling degree bound and which structural exception clause (if any)
    the digraph matches; purely structural, no parameter computation."""
    if not (p.strongly_reliable and p.d_value is not None and p.d_value >= (1, 1)):
        raise PropertyNotEligible("needs a strongly reliable property with threshold >= (1,1)")
    if not d.is_connected() or d.n == 0:
        raise PropertyNotEligible("needs a nonempty connected digraph")
    thr = p.d_value
    _, dmax, _ = dg.degree_profile(d)
    bound = max(-(-dmax.plus // thr.plus), -(-dmax.minus // thr.minus))
    if d.n == 1:
        return BrooksClassification(bound, "k1")
    if thr.plus != thr.minus:
        return BrooksClassification(bound, None)
    r = thr.plus
    eul, reg = dg.eulerian_diregular(d)
    if eul and reg == r and in_CR(p, d):
        return BrooksClassification(bound, "cr-diregular")
    tag = dg.classify(d)
    if tag.kind == dg.BIDIRECTED_COMPLETE and (tag.n - 1) % r == 0 and tag.n - 1 >= r:
        return BrooksClassification(bound, "bidirected-complete")
    if r == 1 and tag.kind == dg.BIDIRECTED_CYCLE and tag.n >= 3:
        return BrooksClassification(bound, "bidirected-cycle")
    return BrooksClassification(bound, None)
