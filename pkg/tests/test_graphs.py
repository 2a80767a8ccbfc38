import itertools
import random

import pytest

from unitdist.graphs import (SmallGraph, to_graph6, from_graph6,
                             canonical_form, canonical_graph, are_isomorphic,
                             is_connected, is_biconnected, blocks,
                             articulation_points, find_subgraph,
                             iter_subgraphs, contains)


def random_graph(rng, n, p=0.4):
    g = SmallGraph.from_edges(n, [])
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                g.add_edge(u, v)
    return g


def shuffled(g, rng):
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


def test_graph6_roundtrip_random():
    rng = random.Random(7)
    for _ in range(300):
        g = random_graph(rng, rng.randint(1, 12))
        h = from_graph6(to_graph6(g))
        assert h.n == g.n and h.adj == g.adj


def test_graph6_known_values():
    k4 = SmallGraph.from_edges(4, list(itertools.combinations(range(4), 2)))
    assert to_graph6(k4) == b'C~'
    assert from_graph6('C~').edges() == k4.edges()


def test_canonical_form_is_isomorphism_invariant():
    rng = random.Random(11)
    for _ in range(200):
        g = random_graph(rng, rng.randint(2, 9))
        h = shuffled(g, rng)
        assert canonical_form(g)[0] == canonical_form(h)[0]
        assert are_isomorphic(g, h)


def test_canonical_form_separates_nonisomorphic():
    path = SmallGraph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    star = SmallGraph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert canonical_form(path)[0] != canonical_form(star)[0]
    assert not are_isomorphic(path, star)


def test_canonical_graph_fixed_point():
    rng = random.Random(13)
    for _ in range(100):
        g = random_graph(rng, rng.randint(2, 8))
        c = canonical_graph(g)
        assert canonical_graph(c).adj == c.adj


def test_connectivity_and_blocks():
    g = SmallGraph.from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)])
    assert is_connected(g)
    assert not is_biconnected(g)
    assert articulation_points(g) == (1 << 2) | (1 << 3)  # vertex bitmask
    assert sorted(blocks(g)) == [(0, 1, 2), (2, 3), (3, 4)]

    tri = SmallGraph.from_edges(3, [(0, 1), (1, 2), (2, 0)])
    assert is_biconnected(tri)
    two = SmallGraph.from_edges(2, [(0, 1)])
    assert is_connected(two)


def test_find_subgraph_on_known_hosts():
    k4 = SmallGraph.from_edges(4, list(itertools.combinations(range(4), 2)))
    c5 = SmallGraph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    tri = SmallGraph.from_edges(3, [(0, 1), (1, 2), (2, 0)])
    assert find_subgraph(tri, k4.n, k4.adj) is not None
    assert find_subgraph(tri, c5.n, c5.adj) is None
    assert contains(k4, tri)
    assert not contains(c5, tri)


def test_find_subgraph_witness_is_edge_preserving():
    rng = random.Random(17)
    for _ in range(100):
        host = random_graph(rng, rng.randint(4, 9), p=0.5)
        pat = random_graph(rng, rng.randint(2, 4), p=0.5)
        w = find_subgraph(pat, host.n, host.adj)
        if w is None:
            continue
        assert len(set(w)) == pat.n
        for u, v in pat.edges():
            assert host.has_edge(w[u], w[v])


def test_iter_subgraphs_matches_find_subgraph():
    rng = random.Random(19)
    for _ in range(50):
        host = random_graph(rng, rng.randint(3, 7), p=0.5)
        pat = random_graph(rng, 3, p=0.7)
        found = list(iter_subgraphs(pat, host.n, host.adj))
        assert (find_subgraph(pat, host.n, host.adj) is not None) == bool(found)
        for w in found:
            assert len(set(w)) == pat.n
            for u, v in pat.edges():
                assert host.has_edge(w[u], w[v])


def test_kernel_canonicalization_matches_reference():
    # the numba kernels must agree with the pure-python reference
    from unitdist import _kernels
    from unitdist.graphs import _code
    import numpy as np
    rng = random.Random(23)
    for _ in range(200):
        g = random_graph(rng, rng.randint(2, 9))
        canon = canonical_graph(g)
        ref_code = _code(canon.n, canon.adj, list(range(canon.n)))
        kcode = _kernels.canon_code(g.n, np.array(g.adj, dtype=np.int64))
        assert ref_code == kcode
