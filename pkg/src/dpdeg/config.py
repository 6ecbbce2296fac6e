"""Configurations (D, X, H, f): covers with a degeneracy budget per color.

A configuration pairs a cover with a vertex function f on H assigning each
color an (out, in) budget.  H[T] being strictly f-degenerate (every nonempty
subdigraph has a color whose out-degree is below its out-budget or in-degree
below its in-budget) is what makes a transversal T a coloring.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Optional, Sequence

from .cover import Cover, ColorDigraph, associated_cover, check_transversal, restrict
from .digraph import DegreePair, Digraph
from .errors import DisconnectedRemainder, FormatError, NotStrictlyDegenerate

Pair = tuple[int, int]


class Configuration:
    """A cover plus a total vertex function f on V(H)."""

    __slots__ = ("cover", "f")

    def __init__(self, cover: Cover, f: Mapping[int, Pair]):
        missing = set(cover.h.vertices) - set(f)
        extra = set(f) - set(cover.h.vertices)
        if missing or extra:
            raise FormatError(f"f must be total on V(H) "
                              f"(missing={sorted(missing)}, extra={sorted(extra)})")
        self.cover = cover
        self.f = {x: (int(p[0]), int(p[1])) for x, p in f.items()}

    def support(self) -> set[int]:
        return {x for x, p in self.f.items() if p != (0, 0)}

    def f_sum(self, v: int) -> DegreePair:
        fs = self.f
        p = m = 0
        for x in self.cover.fibres[v]:
            q = fs[x]
            p += q[0]
            m += q[1]
        return DegreePair(p, m)

    def __repr__(self):
        return f"Configuration(cover={self.cover!r}, f={self.f})"


def is_degree_feasible(k: Configuration) -> tuple[bool, Optional[int]]:
    """Componentwise check f(X_v) >= d_D(v); returns the first violating vertex."""
    d = k.cover.base
    for v in range(d.n):
        if not k.f_sum(v) >= d.degree(v):
            return False, v
    return True, None


def strictly_f_degenerate(h: ColorDigraph, f: Mapping[int, Pair],
                          scope: Optional[Iterable[int]] = None) -> Optional[list[int]]:
    """Greedy elimination order for H[scope], or None.

    Repeatedly removes the smallest color whose current (out, in) degree is
    below f on either coordinate.  Greedy peeling is complete here because
    removability is monotone under vertex deletion (degrees only decrease), so
    the order of removals cannot matter for success.
    """
    live = set(h.vertices) if scope is None else set(scope)
    out_deg = {x: len(h.out[x] & live) for x in live}
    in_deg = {x: len(h.inn[x] & live) for x in live}
    order: list[int] = []
    while live:
        pick = None
        for x in sorted(live):
            if out_deg[x] < f[x][0] or in_deg[x] < f[x][1]:
                pick = x
                break
        if pick is None:
            return None
        live.discard(pick)
        order.append(pick)
        for y in h.out[pick]:
            if y in live:
                in_deg[y] -= 1
        for y in h.inn[pick]:
            if y in live:
                out_deg[y] -= 1
    return order


def check_elimination_order(h: ColorDigraph, f: Mapping[int, Pair],
                            order: Sequence[int]) -> bool:
    """Replay an elimination order: step i must remove a color whose degree in
    the remaining induced subgraph violates f on a coordinate."""
    rest = set(order)
    if len(rest) != len(order):
        return False
    for x in order:
        od, idd = h.degree_in(x, rest)
        if not (od < f[x][0] or idd < f[x][1]):
            return False
        rest.discard(x)
    return True


def reduce(k: Configuration, t: Iterable[int]) -> Configuration:
    """The reduced configuration K/T for a partial transversal T.

    Requires H[T] strictly f-degenerate and the base minus dom(T) connected.
    The remaining budgets drop by the number of matched arcs into/out of T,
    clamped at zero; degree-feasibility is preserved.
    """
    tset = set(t)
    if not tset:
        return k
    kind, dom = check_transversal(k.cover, tset)
    if kind == "invalid":
        raise NotStrictlyDegenerate("T is not a partial transversal")
    if strictly_f_degenerate(k.cover.h, k.f, tset) is None:
        raise NotStrictlyDegenerate("H[T] is not strictly f-degenerate")
    remaining = [v for v in range(k.cover.base.n) if v not in dom]
    keep_colors = [x for v in remaining for x in k.cover.fibres[v]]
    sub = restrict(k.cover, keep_colors)
    h = k.cover.h
    f2 = {}
    for x in keep_colors:
        p, m = k.f[x]
        p2 = max(0, p - len(h.out[x] & tset))
        m2 = max(0, m - len(h.inn[x] & tset))
        f2[x] = (p2, m2)
    if remaining and not sub.base.is_connected():
        raise DisconnectedRemainder("base minus dom(T) is disconnected")
    return Configuration(sub, f2)


def from_vector_function(base: Digraph, p: int, fvec) -> Configuration:
    """Adapter from the color-indexed vector form: p budget functions on the
    base digraph become one configuration over the constant-list cover.

    `fvec` is a sequence of p mappings (or callables) vertex -> (out, in).
    """
    if p < 1:
        raise FormatError("need at least one budget function")
    lists = {v: list(range(1, p + 1)) for v in range(base.n)}
    cov = associated_cover(base, lists)
    f = {}
    for x, (v, cname) in cov.labels.items():
        fi = fvec[cname - 1]
        val = fi(v) if callable(fi) else fi[v]
        f[x] = (int(val[0]), int(val[1]))
    return Configuration(cov, f)


# -- text format ---------------------------------------------------------------

def config_from_cover_block(cover: Cover, f_lines) -> Configuration:
    f = {}
    for (x, p, m) in f_lines:
        if x in f:
            raise FormatError(f"duplicate f line for color {x}")
        f[x] = (p, m)
    return Configuration(cover, f)


def format_config(k: Configuration, name: str = "k", base_name: str = "d") -> str:
    from .cover import format_cover
    return format_cover(k.cover, name=name, base_name=base_name, f=k.f)
