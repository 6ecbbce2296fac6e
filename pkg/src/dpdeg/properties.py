"""Pluggable digraph properties with criticality data.

A property handle carries a membership predicate plus declared closure flags
(hereditary / monotone / additive / nontrivial).  A reliable property is
nontrivial, hereditary and additive; strongly reliable adds monotone.

CR(P) is the class of digraphs outside P all of whose vertex-deleted
subdigraphs are in P; d(P) is the componentwise minimum of (min out-degree,
min in-degree) over CR(P).  Built-in properties ship closed-form d values;
for user properties a bounded exhaustive search yields an upper bound.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Optional

from .digraph import DegreePair, Digraph, degree_profile
from .enumeration import connected_digraphs_upto
from .errors import BadParameter, NoCRFound

CLOSED_FORM = "closed_form"
SEARCHED_UPPER_BOUND = "searched_upper_bound"


@dataclass
class DigraphProperty:
    name: str
    membership: Callable[[Digraph], bool]
    hereditary: bool = True
    monotone: bool = False
    additive: bool = True
    nontrivial: bool = True
    d_value: Optional[DegreePair] = None
    d_exactness: str = SEARCHED_UPPER_BOUND
    _member_cache: dict = field(default_factory=dict, repr=False)
    _d_cache: dict = field(default_factory=dict, repr=False)

    @property
    def reliable(self) -> bool:
        return self.nontrivial and self.hereditary and self.additive

    @property
    def strongly_reliable(self) -> bool:
        return self.reliable and self.monotone

    def member(self, d: Digraph) -> bool:
        key = (d.n, d.arcs)
        hit = self._member_cache.get(key)
        if hit is None:
            hit = bool(self.membership(d))
            self._member_cache[key] = hit
        return hit


def is_acyclic(d: Digraph) -> bool:
    """No directed cycle (Kahn peeling by in-degree)."""
    indeg = [len(d.in_neighbors(v)) for v in range(d.n)]
    queue = [v for v in range(d.n) if indeg[v] == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for w in d.out_neighbors(v):
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return seen == d.n


def is_strictly_m_degenerate(d: Digraph, m: int) -> bool:
    """Every nonempty subdigraph has a vertex with min(out, in) degree < m.

    Greedy peeling by min-degree is complete: checking induced subdigraphs
    suffices (a non-induced subdigraph only has smaller degrees).
    """
    live = set(range(d.n))
    out_deg = {v: len(d.out_neighbors(v)) for v in live}
    in_deg = {v: len(d.in_neighbors(v)) for v in live}
    while live:
        pick = None
        for v in live:
            if min(out_deg[v], in_deg[v]) < m:
                pick = v
                break
        if pick is None:
            return False
        live.discard(pick)
        for w in d.out_neighbors(pick):
            if w in live:
                in_deg[w] -= 1
        for w in d.in_neighbors(pick):
            if w in live:
                out_deg[w] -= 1
    return True


def builtin(name: str, m: Optional[int] = None) -> DigraphProperty:
    """Built-in properties: "ad" (acyclic) and "sd" with parameter m >= 1."""
    if name == "ad":
        return DigraphProperty("ad", is_acyclic, hereditary=True, monotone=True,
                               additive=True, nontrivial=True,
                               d_value=DegreePair(1, 1), d_exactness=CLOSED_FORM)
    if name == "sd":
        if m is None or m < 1:
            raise BadParameter("sd needs m >= 1 (m = 0 is the trivial class)")
        return DigraphProperty(f"sd:{m}", lambda d, m=m: is_strictly_m_degenerate(d, m),
                               hereditary=True, monotone=True, additive=True,
                               nontrivial=True, d_value=DegreePair(m, m),
                               d_exactness=CLOSED_FORM)
    raise BadParameter(f"unknown builtin property {name!r}")


def parse_property(spec: str) -> DigraphProperty:
    """CLI names: "ad" or "sd:m"."""
    if spec == "ad":
        return builtin("ad")
    if spec.startswith("sd:"):
        return builtin("sd", int(spec[3:]))
    raise BadParameter(f"unknown property spec {spec!r}")


def register(name: str, membership: Callable[[Digraph], bool], *, hereditary: bool,
             monotone: bool, additive: bool, nontrivial: bool,
             spot_check: bool = True, rng_seed: int = 0) -> DigraphProperty:
    """Wrap a user predicate, spot-checking the declared flags on small random
    instances (full verification from a black-box predicate is impossible)."""
    p = DigraphProperty(name, membership, hereditary=hereditary, monotone=monotone,
                        additive=additive, nontrivial=nontrivial)
    if spot_check:
        _spot_check_flags(p, random.Random(rng_seed))
    return p


def _random_digraph(rng: random.Random, n: int) -> Digraph:
    arcs = [(u, v) for u in range(n) for v in range(n)
            if u != v and rng.random() < 0.4]
    return Digraph(n, arcs)


def _spot_check_flags(p: DigraphProperty, rng: random.Random, rounds: int = 40):
    if p.nontrivial and p.hereditary:
        if not p.member(Digraph(0, [])) or not p.member(Digraph(1, [])):
            raise BadParameter(f"{p.name}: a nontrivial hereditary property must "
                               f"contain the empty digraph and the single vertex")
    for _ in range(rounds):
        d = _random_digraph(rng, rng.randint(1, 5))
        if p.member(d):
            if p.hereditary:
                verts = [v for v in range(d.n) if rng.random() < 0.6]
                if not p.member(d.induced(verts)):
                    raise BadParameter(f"{p.name}: declared hereditary but an induced "
                                       f"subdigraph of a member is not a member")
            if p.monotone:
                arcs = [a for a in d.arcs if rng.random() < 0.6]
                if not p.member(Digraph(d.n, arcs)):
                    raise BadParameter(f"{p.name}: declared monotone but a subdigraph "
                                       f"of a member is not a member")
            if p.additive:
                e = _random_digraph(rng, rng.randint(1, 4))
                if p.member(e):
                    joint = Digraph(d.n + e.n, list(d.arcs)
                                    + [(u + d.n, v + d.n) for (u, v) in e.arcs])
                    if not p.member(joint):
                        raise BadParameter(f"{p.name}: declared additive but a disjoint "
                                           f"union of members is not a member")


def in_CR(p: DigraphProperty, d: Digraph) -> bool:
    """D is outside P but every vertex-deleted subdigraph is inside (n+1 calls)."""
    if p.member(d):
        return False
    return all(p.member(d.delete_vertex(v)) for v in range(d.n))


def compute_d(p: DigraphProperty, n_max: int = 4) -> tuple[DegreePair, str]:
    """The degree threshold d(P) = (min out-degree over CR, min in-degree over CR).

    Closed-form values are returned as such; otherwise connected digraphs up to
    n_max are searched and the result is only an upper bound on each component.
    """
    if p.d_value is not None and p.d_exactness == CLOSED_FORM:
        return p.d_value, CLOSED_FORM
    if n_max < 2:
        raise BadParameter("n_max must be at least 2")
    if n_max in p._d_cache:
        return p._d_cache[n_max]
    best_plus = best_minus = None
    for d in connected_digraphs_upto(n_max):
        if in_CR(p, d):
            _, _, dmin = degree_profile(d)
            best_plus = dmin.plus if best_plus is None else min(best_plus, dmin.plus)
            best_minus = dmin.minus if best_minus is None else min(best_minus, dmin.minus)
    if best_plus is None:
        raise NoCRFound(f"no CR({p.name}) member of order <= {n_max}")
    out = (DegreePair(best_plus, best_minus), SEARCHED_UPPER_BOUND)
    p._d_cache[n_max] = out
    return out
