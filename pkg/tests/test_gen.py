import itertools

from unitdist.gen import count, generate
from unitdist.graphs import (SmallGraph, canonical_form, is_connected,
                             is_biconnected, to_graph6)


def brute_count(n, filt):
    """Isomorphism classes by exhaustive edge-subset enumeration (tiny n)."""
    pairs = list(itertools.combinations(range(n), 2))
    seen = set()
    for bits in range(1 << len(pairs)):
        g = SmallGraph.from_edges(
            n, [e for i, e in enumerate(pairs) if bits >> i & 1])
        if filt == 'connected' and not is_connected(g):
            continue
        if filt == 'biconnected' and not (is_connected(g)
                                          and is_biconnected(g)):
            continue
        seen.add(canonical_form(g)[0])
    return len(seen)


def test_counts_against_brute_force_small_n():
    for n in (1, 2, 3, 4, 5):
        for filt in ('all', 'connected', 'biconnected'):
            assert count(n, filt) == brute_count(n, filt), (n, filt)


def test_known_class_counts():
    # numbers of graphs / connected graphs on n vertices
    assert [count(n, 'all') for n in range(1, 8)] == [1, 2, 4, 11, 34, 156,
                                                      1044]
    assert [count(n, 'connected') for n in range(1, 8)] == [1, 1, 2, 6, 21,
                                                            112, 853]


def test_generate_is_sorted_and_duplicate_free():
    graphs = generate(7, 'biconnected')
    lines = [to_graph6(g) for g in graphs]
    assert lines == sorted(lines)
    assert len(set(lines)) == len(lines)
    for g in graphs:
        assert is_connected(g) and is_biconnected(g)
        # representatives are canonically labeled
        assert canonical_form(g)[0] == to_graph6(g)


def test_thread_count_does_not_change_output():
    a = [to_graph6(g) for g in generate(6, 'connected', threads=1)]
    b = [to_graph6(g) for g in generate(6, 'connected', threads=3)]
    assert a == b
