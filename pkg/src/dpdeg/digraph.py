"""Core digraph representation and structural recognizers.

Digraphs are finite, simple (no loops, no parallel arcs; a digon -- both uv and
vu -- is allowed) with dense integer vertex ids 0..n-1.  Degrees are ordered
pairs (out, in) under the componentwise partial order.  All values are
immutable after construction; every operation breaks ties toward the smallest
vertex id so results are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import FormatError, LoopArc, LoopEdge, Not2Connected, NotConnected, VertexOutOfRange


class DegreePair(tuple):
    """An (out, in) pair in N0^2 with componentwise order and arithmetic.

    Comparison is the componentwise partial order, so both p <= q and q <= p
    may be false.  Addition and scalar multiplication are componentwise.
    """

    __slots__ = ()

    def __new__(cls, plus: int, minus: int):
        return super().__new__(cls, (int(plus), int(minus)))

    @property
    def plus(self) -> int:
        return self[0]

    @property
    def minus(self) -> int:
        return self[1]

    def __add__(self, other):
        return DegreePair(self[0] + other[0], self[1] + other[1])

    __radd__ = __add__

    def __sub__(self, other):
        return DegreePair(self[0] - other[0], self[1] - other[1])

    def __mul__(self, k: int):
        return DegreePair(self[0] * k, self[1] * k)

    __rmul__ = __mul__

    def __le__(self, other):
        return self[0] <= other[0] and self[1] <= other[1]

    def __ge__(self, other):
        return self[0] >= other[0] and self[1] >= other[1]

    def __lt__(self, other):
        return self <= other and tuple(self) != tuple(other)

    def __gt__(self, other):
        return self >= other and tuple(self) != tuple(other)

    def __repr__(self):
        return f"({self[0]},{self[1]})"


ZERO = DegreePair(0, 0)


class Digraph:
    """Immutable simple loopless digraph on vertices 0..n-1."""

    __slots__ = ("n", "arcs", "_out", "_in", "_out_sets")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]]):
        self.n = n
        seen = set()
        for (u, v) in arcs:
            if u == v:
                raise LoopArc(f"loop arc at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRange(f"arc ({u}, {v}) outside 0..{n - 1}")
            seen.add((u, v))
        self.arcs = tuple(sorted(seen))
        out = [[] for _ in range(n)]
        inn = [[] for _ in range(n)]
        for (u, v) in self.arcs:
            out[u].append(v)
            inn[v].append(u)
        self._out = tuple(tuple(s) for s in out)
        self._in = tuple(tuple(sorted(s)) for s in inn)
        self._out_sets = tuple(frozenset(s) for s in out)

    # -- basic queries --------------------------------------------------

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        return self._out[v]

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        return self._in[v]

    def has_arc(self, u: int, v: int) -> bool:
        return v in self._out_sets[u]

    def adjacency(self, u: int, v: int) -> int:
        """The adjacency function a_D: 1 if uv is an arc, else 0."""
        return 1 if v in self._out_sets[u] else 0

    def degree(self, v: int) -> DegreePair:
        return DegreePair(len(self._out[v]), len(self._in[v]))

    def degrees(self) -> list[DegreePair]:
        return [self.degree(v) for v in range(self.n)]

    def vertices(self) -> range:
        return range(self.n)

    def arc_count(self) -> int:
        return len(self.arcs)

    def is_digon(self, u: int, v: int) -> bool:
        return self.has_arc(u, v) and self.has_arc(v, u)

    def ug_neighbors(self, v: int) -> list[int]:
        """Neighbors in the underlying graph UG(D), sorted."""
        return sorted(set(self._out[v]) | set(self._in[v]))

    def ug_edges(self) -> set[tuple[int, int]]:
        return {(min(u, v), max(u, v)) for (u, v) in self.arcs}

    def ug_degree(self, v: int) -> int:
        return len(set(self._out[v]) | set(self._in[v]))

    # -- derived digraphs -----------------------------------------------

    def induced(self, verts: Iterable[int]) -> "Digraph":
        """Induced subdigraph; vertices are relabeled by rank in sorted(verts)."""
        vs = sorted(set(verts))
        rank = {v: i for i, v in enumerate(vs)}
        keep = set(vs)
        return Digraph(len(vs), [(rank[u], rank[v]) for (u, v) in self.arcs
                                 if u in keep and v in keep])

    def delete_vertex(self, v: int) -> "Digraph":
        return self.induced([u for u in range(self.n) if u != v])

    # -- connectivity -----------------------------------------------------

    def components(self) -> list[list[int]]:
        """Connected components of UG(D), each sorted, ordered by least vertex."""
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            stack, comp = [s], []
            seen[s] = True
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in self.ug_neighbors(u):
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return len(self.components()) == 1

    def __eq__(self, other):
        return isinstance(other, Digraph) and self.n == other.n and self.arcs == other.arcs

    def __hash__(self):
        return hash((self.n, self.arcs))

    def __repr__(self):
        return f"Digraph(n={self.n}, arcs={list(self.arcs)})"


def build_digraph(n: int, arcs: Iterable[tuple[int, int]]) -> Digraph:
    """Validated constructor; duplicate arcs are silently deduplicated."""
    if n < 0:
        raise VertexOutOfRange("vertex count must be nonnegative")
    return Digraph(n, arcs)


# -- degree profile ----------------------------------------------------------

def degree_profile(d: Digraph) -> tuple[list[DegreePair], DegreePair, DegreePair]:
    """Per-vertex degree pairs plus (max out, max in) and (min out, min in).

    For the empty digraph all four extremes are 0 by convention.
    """
    degs = d.degrees()
    if not degs:
        return [], ZERO, ZERO
    delta_max = DegreePair(max(p[0] for p in degs), max(p[1] for p in degs))
    delta_min = DegreePair(min(p[0] for p in degs), min(p[1] for p in degs))
    return degs, delta_max, delta_min


def eulerian_diregular(d: Digraph) -> tuple[bool, Optional[int]]:
    """Whether d_out == d_in everywhere, and the common value r if diregular."""
    eul = all(len(d._out[v]) == len(d._in[v]) for v in range(d.n))
    if not eul:
        return False, None
    if d.n == 0:
        return True, None
    r = len(d._out[0])
    if all(len(d._out[v]) == r for v in range(d.n)):
        return True, r
    return True, None


def bidirect(n: int, edges: Iterable[tuple[int, int]]) -> Digraph:
    """Replace each edge of a simple graph by a digon."""
    arcs = []
    for (u, v) in edges:
        if u == v:
            raise LoopEdge(f"loop edge at {u}")
        arcs.append((u, v))
        arcs.append((v, u))
    return build_digraph(n, arcs)


# -- block decomposition -----------------------------------------------------

@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[tuple[int, ...], ...]
    cut_vertices: tuple[int, ...]


def blocks(d: Digraph) -> BlockDecomposition:
    """Biconnected decomposition of UG(D), lifted to D.

    Isolated vertices form singleton blocks; a bridge forms a 2-vertex block.
    Blocks are returned as sorted vertex tuples ordered by least vertex.
    """
    n = d.n
    adj = [d.ug_neighbors(v) for v in range(n)]
    disc = [-1] * n
    low = [0] * n
    cut = [False] * n
    comps: list[set[int]] = []
    edge_stack: list[tuple[int, int]] = []
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        if not adj[root]:
            disc[root] = timer
            timer += 1
            comps.append({root})
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        work = [(root, -1, 0)]
        while work:
            u, parent, i = work.pop()
            if i < len(adj[u]):
                w = adj[u][i]
                work.append((u, parent, i + 1))
                if w == parent:
                    continue  # UG is simple: the parent occurs once in adj[u]
                if disc[w] == -1:
                    edge_stack.append((u, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    if u == root:
                        root_children += 1
                    work.append((w, u, 0))
                elif disc[w] < disc[u]:
                    edge_stack.append((u, w))
                    if disc[w] < low[u]:
                        low[u] = disc[w]
            else:
                if parent != -1:
                    if low[u] < low[parent]:
                        low[parent] = low[u]
                    if low[u] >= disc[parent]:
                        comp: set[int] = set()
                        while edge_stack and edge_stack[-1] != (parent, u):
                            a, b = edge_stack.pop()
                            comp.add(a)
                            comp.add(b)
                        if edge_stack:
                            a, b = edge_stack.pop()
                            comp.add(a)
                            comp.add(b)
                        comps.append(comp)
                        if parent != root:
                            cut[parent] = True
        if root_children >= 2:
            cut[root] = True
    block_sets = sorted(tuple(sorted(c)) for c in comps)
    return BlockDecomposition(tuple(block_sets), tuple(v for v in range(n) if cut[v]))


def cut_vertices(d: Digraph) -> tuple[int, ...]:
    return blocks(d).cut_vertices


def is_2connected(d: Digraph) -> bool:
    """UG(D) is 2-connected: at least 3 vertices, connected, no cut vertex."""
    return d.n >= 3 and d.is_connected() and not cut_vertices(d)


# -- the 2-connected decomposition step --------------------------------------

@dataclass(frozen=True)
class DecompositionCase:
    kind: str  # "cycle" | "vertex" | "path"
    vertex: Optional[int] = None
    path: Optional[tuple[int, ...]] = None


def decompose_2connected(d: Digraph) -> DecompositionCase:
    """One reduction step on a 2-connected UG(D).

    Returns the first applicable of: the whole graph is a cycle; a vertex whose
    removal stays 2-connected (smallest id); a path of UG-degree-2 vertices
    whose removal stays 2-connected (lexicographically smallest).
    """
    if not is_2connected(d):
        raise Not2Connected("underlying graph is not 2-connected")
    if all(d.ug_degree(v) == 2 for v in range(d.n)):
        return DecompositionCase("cycle")
    for v in range(d.n):
        if is_2connected(d.delete_vertex(v)):
            return DecompositionCase("vertex", vertex=v)
    best = None
    deg2 = [v for v in range(d.n) if d.ug_degree(v) == 2]
    deg2_set = set(deg2)

    def extend(path: list[int]):
        nonlocal best
        if len(path) >= 2:
            rest = [u for u in range(d.n) if u not in path]
            if is_2connected(d.induced(rest)):
                cand = tuple(path)
                if best is None or cand < best:
                    best = cand
        last = path[-1]
        for w in d.ug_neighbors(last):
            if w in deg2_set and w not in path:
                extend(path + [w])

    for start in deg2:
        extend([start])
    if best is None:
        raise Not2Connected("no reduction case applies (input not 2-connected?)")
    return DecompositionCase("path", path=best)


# -- family recognition ------------------------------------------------------

@dataclass(frozen=True)
class FamilyTag:
    kind: str  # see constants below
    n: int = 0


BIDIRECTED_COMPLETE = "bidirected_complete"
BIDIRECTED_CYCLE = "bidirected_cycle"
DIRECTED_CYCLE = "directed_cycle"
ANTIDIRECTED_CYCLE = "antidirected_cycle"
SINGLE_ARC = "single_arc"
OTHER = "other"


def classify(d: Digraph) -> FamilyTag:
    """Exact recognition of the special connected families.

    K1 and the digon count as bidirected complete graphs (orders 1 and 2), and
    the bidirected triangle as BidirectedComplete(3); DirectedCycle is only
    emitted for n >= 3.
    """
    if not d.is_connected() or d.n == 0:
        raise NotConnected("classify requires a nonempty connected digraph")
    n = d.n
    if n == 1:
        return FamilyTag(BIDIRECTED_COMPLETE, 1)
    all_digons = all(d.is_digon(u, v) for u in range(n) for v in range(u + 1, n)
                     if d.has_arc(u, v) or d.has_arc(v, u))
    m_edges = len(d.ug_edges())
    if all_digons and m_edges == n * (n - 1) // 2:
        return FamilyTag(BIDIRECTED_COMPLETE, n)
    is_ug_cycle = n >= 3 and m_edges == n and all(d.ug_degree(v) == 2 for v in range(n))
    if is_ug_cycle and all_digons:
        return FamilyTag(BIDIRECTED_CYCLE, n)
    if n == 2 and d.arc_count() == 1:
        return FamilyTag(SINGLE_ARC, 2)
    if is_ug_cycle and d.arc_count() == n and all(d.degree(v) == (1, 1) for v in range(n)):
        return FamilyTag(DIRECTED_CYCLE, n)
    if is_ug_cycle and all(len(d._out[v]) == 0 or len(d._in[v]) == 0 for v in range(n)):
        return FamilyTag(ANTIDIRECTED_CYCLE, n)
    return FamilyTag(OTHER, n)


# -- ready-made digraphs ------------------------------------------------------

def directed_cycle(n: int) -> Digraph:
    return build_digraph(n, [(i, (i + 1) % n) for i in range(n)])


def bidirected_complete(n: int) -> Digraph:
    return bidirect(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def bidirected_cycle(n: int) -> Digraph:
    return bidirect(n, [(i, (i + 1) % n) for i in range(n)])


def antidirected_cycle(n: int) -> Digraph:
    """Alternating sources (even ids) and sinks (odd ids); n must be even >= 4."""
    if n < 4 or n % 2:
        raise VertexOutOfRange("an antidirected cycle needs even order >= 4")
    arcs = []
    for i in range(n):
        j = (i + 1) % n
        arcs.append((i, j) if i % 2 == 0 else (j, i))
    return build_digraph(n, arcs)


def single_arc() -> Digraph:
    return build_digraph(2, [(0, 1)])


def transitive_tournament(n: int) -> Digraph:
    return build_digraph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


# -- text format ---------------------------------------------------------------
#
# digraph <name>
# vertices <n>
# arc <u> <v>
# end

def parse_digraph_block(lines: Sequence[str]) -> tuple[str, Digraph]:
    """Parse one digraph block (header line through `end`)."""
    head = lines[0].split()
    if len(head) != 2 or head[0] != "digraph":
        raise FormatError(f"bad digraph header: {lines[0]!r}")
    name = head[1]
    n = None
    arcs = []
    for ln in lines[1:-1]:
        toks = ln.split()
        if toks[0] == "vertices":
            if len(toks) != 2:
                raise FormatError(f"bad vertices line: {ln!r}")
            n = int(toks[1])
        elif toks[0] == "arc":
            if len(toks) != 3:
                raise FormatError(f"bad arc line: {ln!r}")
            arcs.append((int(toks[1]), int(toks[2])))
        else:
            raise FormatError(f"unknown keyword {toks[0]!r} in digraph block")
    if lines[-1].strip() != "end":
        raise FormatError("digraph block not terminated by 'end'")
    if n is None:
        raise FormatError(f"digraph {name!r} has no vertices line")
    return name, build_digraph(n, arcs)


def format_digraph(d: Digraph, name: str = "d") -> str:
    out = [f"digraph {name}", f"vertices {d.n}"]
    out += [f"arc {u} {v}" for (u, v) in d.arcs]
    out.append("end")
    return "\n".join(out) + "\n"
