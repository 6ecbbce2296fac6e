"""Covers (X, H) of a digraph: fibres plus a matching-structured digraph.

A cover assigns each base vertex v a fibre X_v of colors (disjoint sets of
global integer ids) and puts a digraph H on the union such that every fibre is
independent and, for each ordered base arc (u, v), the H-arcs from X_u to X_v
form a matching; no H-arcs exist over non-arcs.  Validation is eager: all
downstream code may assume these conditions.

Color ids are preserved by restriction; base vertices of a restricted cover
are relabeled densely by rank (sorted order of the retained vertices).
"""

from __future__ import annotations

from typing import Iterable, Mapping, Optional, Sequence

from .digraph import Digraph, build_digraph
from .errors import (ArcWithoutBaseArc, FibreNotIndependent, FibreOverlap,
                     FormatError, NotAMatching)


class ColorDigraph:
    """Immutable digraph over an arbitrary finite set of integer color ids."""

    __slots__ = ("vertices", "arcs", "out", "inn")

    def __init__(self, vertices: Iterable[int], arcs: Iterable[tuple[int, int]]):
        self.vertices = frozenset(vertices)
        self.arcs = frozenset(arcs)
        out: dict[int, set[int]] = {v: set() for v in self.vertices}
        inn: dict[int, set[int]] = {v: set() for v in self.vertices}
        for (x, y) in self.arcs:
            out[x].add(y)
            inn[y].add(x)
        self.out = {v: frozenset(s) for v, s in out.items()}
        self.inn = {v: frozenset(s) for v, s in inn.items()}

    def has_arc(self, x: int, y: int) -> bool:
        return y in self.out.get(x, ())

    def degree_in(self, x: int, scope) -> tuple[int, int]:
        """(out, in) degree of x counting only neighbors inside scope."""
        return (len(self.out[x] & scope), len(self.inn[x] & scope))

    def induced(self, colors: Iterable[int]) -> "ColorDigraph":
        keep = frozenset(colors)
        return ColorDigraph(keep, [(x, y) for (x, y) in self.arcs
                                   if x in keep and y in keep])

    def ug_neighbors(self, x: int):
        return self.out[x] | self.inn[x]

    def ug_components(self) -> list[frozenset[int]]:
        seen: set[int] = set()
        comps = []
        for s in sorted(self.vertices):
            if s in seen:
                continue
            stack, comp = [s], set()
            seen.add(s)
            while stack:
                x = stack.pop()
                comp.add(x)
                for y in self.out[x] | self.inn[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            comps.append(frozenset(comp))
        return comps

    def to_digraph(self) -> tuple[Digraph, list[int]]:
        """Densify: returns (Digraph, sorted color list giving the relabeling)."""
        order = sorted(self.vertices)
        rank = {c: i for i, c in enumerate(order)}
        return build_digraph(len(order), [(rank[x], rank[y]) for (x, y) in self.arcs]), order

    def __eq__(self, other):
        return (isinstance(other, ColorDigraph) and self.vertices == other.vertices
                and self.arcs == other.arcs)

    def __hash__(self):
        return hash((self.vertices, self.arcs))

    def __repr__(self):
        return f"ColorDigraph({sorted(self.vertices)}, {sorted(self.arcs)})"


class Cover:
    """A validated cover (X, H) of a base digraph."""

    __slots__ = ("base", "fibres", "owner", "h", "_out_partner", "_in_partner", "labels")

    def __init__(self, base: Digraph, fibres: Sequence[Sequence[int]],
                 h: ColorDigraph, _validated: bool = False):
        self.base = base
        self.fibres = tuple(tuple(sorted(f)) for f in fibres)
        self.labels: Optional[dict] = None
        owner: dict[int, int] = {}
        for v, fib in enumerate(self.fibres):
            for x in fib:
                if x in owner:
                    raise FibreOverlap(f"color {x} lies in fibres of {owner[x]} and {v}")
                owner[x] = v
        self.owner = owner
        self.h = h
        if not _validated:
            self._validate()
        # partial bijections per ordered base arc: partner of x toward fibre v
        outp: dict[tuple[int, int], int] = {}
        inp: dict[tuple[int, int], int] = {}
        for (x, y) in h.arcs:
            outp[(x, self.owner[y])] = y
            inp[(y, self.owner[x])] = x
        self._out_partner = outp
        self._in_partner = inp

    def _validate(self):
        known = set(self.owner)
        if set(self.h.vertices) != known:
            extra = set(self.h.vertices) - known
            missing = known - set(self.h.vertices)
            raise FibreOverlap(f"H vertex set must equal the fibre union "
                               f"(extra={sorted(extra)}, missing={sorted(missing)})")
        per_pair: dict[tuple[int, int], list[tuple[int, int]]] = {}
        for (x, y) in self.h.arcs:
            u, v = self.owner[x], self.owner[y]
            if u == v:
                raise FibreNotIndependent(f"arc {x}->{y} inside fibre of vertex {u}")
            if not self.base.has_arc(u, v):
                raise ArcWithoutBaseArc(u, v)
            per_pair.setdefault((u, v), []).append((x, y))
        for (u, v), arcs in per_pair.items():
            tails = [x for (x, _) in arcs]
            heads = [y for (_, y) in arcs]
            if len(set(tails)) != len(tails) or len(set(heads)) != len(heads):
                raise NotAMatching(u, v)

    # -- queries ----------------------------------------------------------

    def colors(self) -> frozenset[int]:
        return self.h.vertices

    def fibre(self, v: int) -> tuple[int, ...]:
        return self.fibres[v]

    def out_partner(self, x: int, v: int) -> Optional[int]:
        """The color y in X_v with arc x->y, if any."""
        return self._out_partner.get((x, v))

    def in_partner(self, x: int, v: int) -> Optional[int]:
        """The color y in X_v with arc y->x, if any."""
        return self._in_partner.get((x, v))

    def dom(self, colors: Iterable[int]) -> set[int]:
        """The set of base vertices whose fibre meets the given colors."""
        return {self.owner[x] for x in colors}

    def __repr__(self):
        return f"Cover(base={self.base!r}, fibres={self.fibres}, h={self.h!r})"


def build_cover(base: Digraph, fibres, harcs: Iterable[tuple[int, int]]) -> Cover:
    """Validated cover constructor.

    `fibres` is a mapping v -> iterable of color ids or a sequence indexed by
    vertex; every base vertex must be covered (possibly by an empty fibre).
    """
    if isinstance(fibres, Mapping):
        fib_list = [tuple(fibres.get(v, ())) for v in range(base.n)]
    else:
        fib_list = [tuple(f) for f in fibres]
        if len(fib_list) != base.n:
            raise FibreOverlap("fibre sequence length must equal the vertex count")
    all_colors = [x for f in fib_list for x in f]
    h = ColorDigraph(all_colors, harcs)
    return Cover(base, fib_list, h)


def saturation_and_uniformity(c: Cover) -> tuple[bool, Optional[int]]:
    """(saturated, r): saturated iff every base arc's matching is perfect;
    r is the common fibre size when the cover is uniform, else None."""
    saturated = True
    for (u, v) in c.base.arcs:
        fu, fv = c.fibres[u], c.fibres[v]
        if len(fu) != len(fv):
            saturated = False
            break
        if any(c.out_partner(x, v) is None for x in fu):
            saturated = False
            break
    sizes = {len(f) for f in c.fibres}
    uniform_r = sizes.pop() if len(sizes) == 1 else None
    if uniform_r == 0:
        uniform_r = None
    return saturated, uniform_r


def restrict(c: Cover, colors: Iterable[int]) -> Cover:
    """Subcover restricted to a color set U: base D[dom(U)], fibres X_v & U, H[U].

    Color ids survive; base vertices are relabeled by rank among the retained
    vertices (the mapping is recoverable as sorted(dom(U))).
    """
    keep = frozenset(colors)
    dom = sorted(c.dom(keep))
    new_base = c.base.induced(dom)
    fibres = [tuple(x for x in c.fibres[v] if x in keep) for v in dom]
    h = c.h.induced(keep)
    return Cover(new_base, fibres, h, _validated=True)


def restrict_to_vertices(c: Cover, verts: Iterable[int]) -> Cover:
    """The subcover over an induced subdigraph: all colors of the kept fibres."""
    vs = set(verts)
    return restrict(c, [x for v in vs for x in c.fibres[v]])


def associated_cover(base: Digraph, lists: Mapping[int, Sequence]) -> Cover:
    """The cover of a list assignment: fibres {v} x L(v), arcs between equal
    colors over base arcs.  Color ids are assigned densely in (vertex, list
    position) order; the label map is attached as `cover.labels`."""
    labels = {}
    fibres = []
    next_id = 0
    by_label: dict[int, dict] = {}
    for v in range(base.n):
        fib = []
        seen = set()
        for cname in lists[v]:
            if cname in seen:
                continue
            seen.add(cname)
            labels[next_id] = (v, cname)
            by_label.setdefault(v, {})[cname] = next_id
            fib.append(next_id)
            next_id += 1
        fibres.append(tuple(fib))
    harcs = []
    for (u, v) in base.arcs:
        for cname, x in by_label.get(u, {}).items():
            y = by_label.get(v, {}).get(cname)
            if y is not None:
                harcs.append((x, y))
    cov = build_cover(base, fibres, harcs)
    cov.labels = labels
    return cov


def check_transversal(c: Cover, colors: Iterable[int]) -> tuple[str, set[int]]:
    """Classify a color set as 'full', 'partial' or 'invalid'; also return its
    domain (the base vertices it covers)."""
    t = set(colors)
    if not t <= set(c.h.vertices):
        return "invalid", set()
    counts: dict[int, int] = {}
    for x in t:
        v = c.owner[x]
        counts[v] = counts.get(v, 0) + 1
        if counts[v] > 1:
            return "invalid", set()
    dom = set(counts)
    if len(dom) == c.base.n and all(counts.get(v, 0) == 1 for v in range(c.base.n)):
        return "full", dom
    return "partial", dom


# -- text format ---------------------------------------------------------------
#
# cover <name>
# base <digraph-name>
# fibre <v> : <x1> <x2> ...
# harc <x> <y>
# f <x> <plus> <minus>        (optional; any f line makes the block a config)
# end

def parse_cover_block(lines: Sequence[str], digraphs: Mapping[str, Digraph]):
    """Parse one cover block; returns (name, Cover, f_lines) where f_lines is a
    list of (color, plus, minus) entries (empty for a plain cover)."""
    head = lines[0].split()
    if len(head) != 2 or head[0] != "cover":
        raise FormatError(f"bad cover header: {lines[0]!r}")
    name = head[1]
    base = None
    fibres: dict[int, list[int]] = {}
    harcs = []
    f_lines = []
    for ln in lines[1:-1]:
        toks = ln.split()
        if toks[0] == "base":
            if len(toks) != 2:
                raise FormatError(f"bad base line: {ln!r}")
            if toks[1] not in digraphs:
                raise FormatError(f"cover {name!r} references unknown digraph {toks[1]!r}")
            base = digraphs[toks[1]]
        elif toks[0] == "fibre":
            if len(toks) < 3 or toks[2] != ":":
                raise FormatError(f"bad fibre line: {ln!r}")
            fibres[int(toks[1])] = [int(t) for t in toks[3:]]
        elif toks[0] == "harc":
            if len(toks) != 3:
                raise FormatError(f"bad harc line: {ln!r}")
            harcs.append((int(toks[1]), int(toks[2])))
        elif toks[0] == "f":
            if len(toks) != 4:
                raise FormatError(f"bad f line: {ln!r}")
            f_lines.append((int(toks[1]), int(toks[2]), int(toks[3])))
        else:
            raise FormatError(f"unknown keyword {toks[0]!r} in cover block")
    if lines[-1].strip() != "end":
        raise FormatError("cover block not terminated by 'end'")
    if base is None:
        raise FormatError(f"cover {name!r} has no base line")
    return name, build_cover(base, fibres, harcs), f_lines


def format_cover(c: Cover, name: str = "c", base_name: str = "d",
                 f: Optional[Mapping[int, tuple[int, int]]] = None) -> str:
    out = [f"cover {name}", f"base {base_name}"]
    for v in range(c.base.n):
        out.append("fibre %d : %s" % (v, " ".join(str(x) for x in c.fibres[v])))
    for (x, y) in sorted(c.h.arcs):
        out.append(f"harc {x} {y}")
    if f is not None:
        for x in sorted(c.h.vertices):
            p, m = f[x]
            out.append(f"f {x} {p} {m}")
    out.append("end")
    return "\n".join(out) + "\n"
