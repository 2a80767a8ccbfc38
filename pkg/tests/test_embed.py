import numpy as np
import pytest

from unitdist.embed import (solve_numeric, circle_intersect, numeric_pointset,
                            embed_into, extend_witness, grow_witness,
                            edge_residual, min_separation, _two_cuts,
                            RESIDUAL_OK, SEPARATION)
from unitdist.graphs import SmallGraph
from unitdist.catalog import entry


def test_triangle_embeds_equilaterally():
    tri = SmallGraph.from_edges(3, [(0, 1), (1, 2), (2, 0)])
    e = solve_numeric(tri)
    assert e is not None
    assert e.residual < RESIDUAL_OK
    # all three side lengths 1 => equilateral
    for u, v in tri.edges():
        assert abs(np.hypot(*(e.coords[u] - e.coords[v])) - 1) < 1e-9


def test_k4_does_not_embed():
    k4 = SmallGraph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3),
                                   (2, 3)])
    assert solve_numeric(k4, budget=40) is None


def test_solve_is_deterministic():
    g = SmallGraph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    a = solve_numeric(g, seed=3)
    b = solve_numeric(g, seed=3)
    assert a is not None and np.array_equal(a.coords, b.coords)


def test_unfolding_rescues_strongly_folded_graphs():
    # three triangles in a strip: almost every random start converges to a
    # folded (coincident-point) solution
    strip = SmallGraph.from_edges(7, [(0, 1), (0, 3), (1, 2), (1, 3), (1, 4),
                                      (2, 4), (2, 5), (2, 6), (3, 4), (4, 5),
                                      (5, 6)])
    e = solve_numeric(strip, seed=0, budget=30)
    assert e is not None
    assert min_separation(e.coords) >= SEPARATION
    # its endpoints land distance 3 apart (the strip is rigid)
    assert abs(np.hypot(*(e.coords[0] - e.coords[6])) - 3) < 1e-6


def test_two_cuts_on_hinged_graph():
    bowtie = SmallGraph.from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4),
                                       (4, 2)])
    cuts = _two_cuts(bowtie)
    assert cuts  # vertex 2 with any partner separates the triangles


def test_circle_intersect():
    pts = circle_intersect((0.0, 0.0), (1.0, 0.0))
    assert len(pts) == 2
    for p in pts:
        assert abs(np.hypot(*p) - 1) < 1e-12
        assert abs(np.hypot(p[0] - 1, p[1]) - 1) < 1e-12
    assert circle_intersect((0, 0), (3, 0)) == []
    assert circle_intersect((0, 0), (2, 0)) == [(1.0, 0.0)]


def test_numeric_pointset_unit_pairs():
    ps = numeric_pointset('tri', [(0, 0), (1, 0), (0.5, np.sqrt(3) / 2),
                                  (3, 0)])
    assert set(ps.unit_pairs) == {(0, 1), (0, 2), (1, 2)}
    assert ps.adj[0] == 0b0110


def test_embed_into_host(g27):
    c6 = SmallGraph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
    w = embed_into(c6, g27)
    assert w is not None
    for u, v in c6.edges():
        d = np.hypot(*(g27.approx[w[u]] - g27.approx[w[v]]))
        assert abs(d - 1) < 1e-9
    k4 = SmallGraph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3),
                                   (2, 3)])
    assert embed_into(k4, g27) is None


def test_extend_witness_adds_degree2_vertex():
    # host: unit equilateral triangle; graph: triangle plus a degree-2 apex
    host = numeric_pointset('tri', [(0, 0), (1, 0), (0.5, np.sqrt(3) / 2)])
    g = SmallGraph.from_edges(4, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 3)])
    ext = extend_witness(host, g)
    assert ext is not None
    p, (i, j) = ext
    assert abs(np.hypot(p[0] - host.approx[i][0],
                        p[1] - host.approx[i][1]) - 1) < 1e-9


def test_grow_witness_reaches_coverage():
    base = [(0, 0), (1, 0), (0.5, np.sqrt(3) / 2)]
    tri_plus = SmallGraph.from_edges(4, [(0, 1), (1, 2), (2, 0), (0, 3),
                                         (1, 3)])
    c4 = SmallGraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    pts, covered = grow_witness(base, [tri_plus, c4])
    assert covered == [True, True]
    assert len(pts) >= 4


def test_single_edge_deletions_of_k4_embed():
    k4 = entry('F(4,6,1)').graph
    for u, v in k4.edges():
        sub = k4.delete_edge(u, v)
        assert solve_numeric(sub) is not None
