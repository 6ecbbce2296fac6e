import random

import pytest

from dpdeg.digraph import (DegreePair, antidirected_cycle, bidirect,
                           bidirected_complete, bidirected_cycle, blocks,
                           build_digraph, classify, cut_vertices,
                           decompose_2connected, degree_profile, directed_cycle,
                           eulerian_diregular, format_digraph, is_2connected,
                           parse_digraph_block, single_arc, transitive_tournament)
from dpdeg.errors import LoopArc, LoopEdge, Not2Connected, NotConnected, VertexOutOfRange

from helpers import oracle_is_2connected, random_connected_digraph


def test_degree_pair_partial_order():
    assert DegreePair(1, 2) <= DegreePair(2, 2)
    assert not DegreePair(2, 1) <= DegreePair(1, 2)
    assert not DegreePair(1, 2) <= DegreePair(2, 1)
    assert DegreePair(1, 1) + DegreePair(2, 0) == DegreePair(3, 1)
    assert 3 * DegreePair(1, 2) == DegreePair(3, 6)
    assert DegreePair(1, 1) < DegreePair(1, 2)
    assert not DegreePair(1, 1) < DegreePair(1, 1)


def test_build_digraph_examples():
    c3 = build_digraph(3, [(0, 1), (1, 2), (2, 0)])
    assert all(c3.degree(v) == (1, 1) for v in range(3))
    digon = build_digraph(2, [(0, 1), (1, 0)])
    assert all(digon.degree(v) == (1, 1) for v in range(2))
    with pytest.raises(LoopArc):
        build_digraph(1, [(0, 0)])
    with pytest.raises(VertexOutOfRange):
        build_digraph(2, [(0, 5)])
    # duplicates silently deduplicated
    assert build_digraph(2, [(0, 1), (0, 1)]).arc_count() == 1


def test_degree_profile_examples():
    degs, dmax, dmin = degree_profile(build_digraph(0, []))
    assert degs == [] and dmax == (0, 0) and dmin == (0, 0)
    _, dmax, dmin = degree_profile(bidirected_complete(3))
    assert dmax == (2, 2) and dmin == (2, 2)
    block = build_digraph(4, [(0, 1), (0, 2), (2, 1), (3, 2), (3, 1)])
    assert [tuple(p) for p in block.degrees()] == [(2, 0), (0, 3), (1, 2), (2, 0)]


def test_degree_sum_invariant_random():
    rng = random.Random(1)
    for _ in range(200):
        d = random_connected_digraph(rng, 1, 7)
        degs = d.degrees()
        assert sum(p.plus for p in degs) == sum(p.minus for p in degs) == d.arc_count()


def test_blocks_examples():
    assert blocks(bidirected_complete(4)) == blocks(bidirected_complete(4))
    bd = blocks(bidirected_complete(4))
    assert bd.blocks == ((0, 1, 2, 3),) and bd.cut_vertices == ()
    two = blocks(build_digraph(3, [(0, 1), (1, 0), (1, 2), (2, 1)]))
    assert two.blocks == ((0, 1), (1, 2)) and two.cut_vertices == (1,)
    assert blocks(directed_cycle(5)).blocks == ((0, 1, 2, 3, 4),)
    iso = blocks(build_digraph(3, [(0, 1)]))
    assert iso.blocks == ((0, 1), (2,))


def test_blocks_partition_invariant():
    # every arc lies in exactly one block; cut vertices appear in >= 2 blocks
    rng = random.Random(2)
    for _ in range(150):
        d = random_connected_digraph(rng, 1, 7)
        bd = blocks(d)
        for (u, v) in d.arcs:
            homes = [b for b in bd.blocks if u in b and v in b]
            assert len(homes) == 1
        counts = {v: sum(v in b for b in bd.blocks) for v in range(d.n)}
        assert set(bd.cut_vertices) == {v for v, c in counts.items() if c >= 2}
        # brute-force articulation oracle
        for v in range(d.n):
            split = not d.delete_vertex(v).is_connected() and d.n > 1
            assert (v in bd.cut_vertices) == split


def test_decompose_2connected_examples():
    assert decompose_2connected(directed_cycle(4)).kind == "cycle"
    case = decompose_2connected(bidirected_complete(4))
    assert case.kind == "vertex" and case.vertex == 0
    with pytest.raises(Not2Connected):
        decompose_2connected(single_arc())
    # K4 with one edge subdivided twice: the path case is valid (removing the
    # two degree-2 vertices leaves K4, 2-connected by exhaustive oracle), but
    # the stated preference order picks the removable vertex 2 first, since
    # K4-e plus the subdivision path minus vertex 2 is a 5-cycle.
    edges = [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (4, 5), (5, 1)]
    d = bidirect(6, edges)
    rest = d.induced([0, 1, 2, 3])
    assert oracle_is_2connected(rest)
    assert all(d.ug_degree(v) == 2 for v in (4, 5))
    case = decompose_2connected(d)
    assert case.kind == "vertex" and case.vertex == 2
    assert oracle_is_2connected(d.delete_vertex(2))
    # a genuine path case: a 4-cycle with one edge replaced by a 2-vertex path
    # is just a 6-cycle (cycle case), so build theta-like: two vertices joined
    # by three paths of lengths 2, 2, 3 -- every vertex has degree 2 except the
    # two hubs; removing an internal path keeps the rest 2-connected.
    theta = bidirect(7, [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 5), (5, 1), (0, 6), (6, 1)])
    case = decompose_2connected(theta)
    assert case.kind in ("vertex", "path")
    if case.kind == "path":
        rest = theta.induced([v for v in range(7) if v not in case.path])
        assert oracle_is_2connected(rest)


def test_decompose_reduction_invariant():
    rng = random.Random(3)
    found = 0
    for _ in range(300):
        d = random_connected_digraph(rng, 3, 6, extra=0.5)
        if not is_2connected(d):
            continue
        found += 1
        case = decompose_2connected(d)
        if case.kind == "cycle":
            assert all(d.ug_degree(v) == 2 for v in range(d.n))
        elif case.kind == "vertex":
            assert oracle_is_2connected(d.delete_vertex(case.vertex))
        else:
            assert len(case.path) >= 2
            assert all(d.ug_degree(v) == 2 for v in case.path)
            rest = d.induced([v for v in range(d.n) if v not in case.path])
            assert oracle_is_2connected(rest)
    assert found > 30


def test_classify_examples():
    assert classify(bidirected_cycle(5)).kind == "bidirected_cycle"
    assert classify(antidirected_cycle(6)) == classify(antidirected_cycle(6))
    assert classify(antidirected_cycle(6)).kind == "antidirected_cycle"
    mixed = build_digraph(3, [(0, 1), (1, 2), (2, 0), (1, 0)])
    assert classify(mixed).kind == "other"
    assert classify(build_digraph(1, [])).kind == "bidirected_complete"
    assert classify(bidirected_complete(2)).kind == "bidirected_complete"
    assert classify(bidirected_complete(3)).kind == "bidirected_complete"
    assert classify(directed_cycle(3)).kind == "directed_cycle"
    assert classify(single_arc()).kind == "single_arc"
    with pytest.raises(NotConnected):
        classify(build_digraph(2, []))


def test_classify_relabel_stability():
    rng = random.Random(4)
    samples = [bidirected_cycle(5), directed_cycle(4), antidirected_cycle(4),
               bidirected_complete(4), transitive_tournament(4)]
    for d in samples:
        for _ in range(10):
            perm = list(range(d.n))
            rng.shuffle(perm)
            relabeled = build_digraph(d.n, [(perm[u], perm[v]) for (u, v) in d.arcs])
            assert classify(relabeled) == classify(d)


def test_eulerian_diregular_examples():
    assert eulerian_diregular(directed_cycle(4)) == (True, 1)
    assert eulerian_diregular(bidirected_complete(3)) == (True, 2)
    assert eulerian_diregular(single_arc()) == (False, None)


def test_eulerian_blocks_are_eulerian():
    # random Eulerian digraphs from arc-disjoint directed cycle unions
    rng = random.Random(5)
    for _ in range(100):
        n = rng.randint(3, 8)
        arcs = set()
        for _ in range(rng.randint(1, 4)):
            size = rng.randint(2, n)
            cyc = rng.sample(range(n), size)
            cand = [(cyc[i], cyc[(i + 1) % size]) for i in range(size)]
            if any(a in arcs for a in cand):
                continue
            arcs.update(cand)
        if not arcs:
            continue
        d = build_digraph(n, arcs)
        assert eulerian_diregular(d)[0]
        for blk in blocks(d).blocks:
            assert eulerian_diregular(d.induced(blk))[0]


def test_bidirect_examples():
    assert bidirect(3, [(0, 1), (1, 2), (2, 0)]).arc_count() == 6
    assert bidirect(3, [(0, 1), (1, 2)]).arc_count() == 4
    assert bidirect(0, []).n == 0
    with pytest.raises(LoopEdge):
        bidirect(2, [(1, 1)])


def test_text_format_roundtrip():
    d = build_digraph(4, [(0, 1), (2, 3), (3, 1)])
    text = format_digraph(d, "t")
    name, back = parse_digraph_block([ln for ln in text.splitlines() if ln.strip()])
    assert name == "t" and back == d
