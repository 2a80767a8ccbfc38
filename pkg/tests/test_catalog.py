import random

from unitdist.catalog import (load_catalog, entry, find_forbidden, is_free,
                              catalog_graph6_lines)
from unitdist.graphs import SmallGraph, contains, canonical_form


def test_catalog_size_and_ids(entries):
    assert len(entries) == 74
    by_n = {}
    for e in entries:
        assert e.id == 'F(%d,%d,%d)' % (e.n, e.m, e.index)
        assert e.graph.n == e.n and e.graph.num_edges() == e.m
        by_n[e.n] = by_n.get(e.n, 0) + 1
    assert by_n == {4: 1, 5: 1, 6: 1, 7: 3, 8: 13, 9: 55}


def test_catalog_is_an_antichain(entries):
    # no member contains another as a (proper or improper) subgraph
    for a in entries:
        for b in entries:
            if a.id == b.id:
                continue
            if (b.n, b.m) <= (a.n, a.m):
                assert not (b.n <= a.n and contains(a.graph, b.graph)), \
                    (a.id, b.id)


def test_entry_lookup():
    e = entry('F(4,6,1)')  # K4
    assert e.n == 4 and e.m == 6
    k4 = SmallGraph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3),
                                   (2, 3)])
    assert canonical_form(e.graph)[0] == canonical_form(k4)[0]


def test_find_forbidden_and_is_free_agree(entries):
    rng = random.Random(5)
    for _ in range(150):
        n = rng.randint(3, 9)
        g = SmallGraph.from_edges(n, [])
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < 0.45:
                    g.add_edge(u, v)
        hit = find_forbidden(g, entries)
        assert is_free(g, entries) == (hit is None)
        if hit is not None:
            e, w = hit
            assert len(set(w)) == e.n
            for u, v in e.graph.edges():
                assert g.has_edge(w[u], w[v])


def test_catalog_graph6_lines(entries):
    lines = catalog_graph6_lines()
    assert len(lines) == 74
    assert len(set(lines)) == 74


def test_k4_and_k23_are_cataloged():
    k23 = SmallGraph.from_edges(5, [(0, 2), (0, 3), (0, 4),
                                    (1, 2), (1, 3), (1, 4)])
    hit = find_forbidden(k23)
    assert hit is not None and hit[0].id == 'F(5,6,1)'
