import json
import random

import numpy as np
import pytest

from unitdist import reasoner
from unitdist.catalog import entry
from unitdist.graphs import SmallGraph
from unitdist.reasoner import (pattern_rules, rigid_motifs, closure,
                               forced_edges, prove_forbidden, ProofTrace,
                               validate_pattern, validate_motif,
                               placement_contradiction)


def random_graph(rng, n, p=0.4):
    g = SmallGraph.from_edges(n, [])
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                g.add_edge(u, v)
    return g


def test_pattern_and_motif_inventory():
    assert len(pattern_rules()) == 5   # forced-pair-4 contributes two pairs
    names = {m.name for m in rigid_motifs()}
    assert names == {'diamond', 'strip3', 'hexpatch', 'collinear4'}


def test_patterns_validate_numerically():
    for rule in pattern_rules():
        assert validate_pattern(rule, trials=30) < 1e-8, rule.name


def test_motifs_validate_numerically():
    for motif in rigid_motifs():
        assert validate_motif(motif, trials=30) < 1e-8, motif.name


def test_closure_is_idempotent_and_monotone():
    rng = random.Random(3)
    for _ in range(500):
        g = random_graph(rng, rng.randint(4, 9))
        h, steps = closure(g)
        assert h.n == g.n
        for u, v in g.edges():
            assert h.has_edge(u, v)
        h2, steps2 = closure(h)
        assert h2.adj == h.adj and steps2 == []


def test_forced_edges_are_recorded_in_steps():
    rng = random.Random(9)
    for _ in range(200):
        g = random_graph(rng, rng.randint(4, 8))
        h, steps = closure(g)
        added = {tuple(s['forced_pair']) for s in steps}
        extra = {(u, v) for u, v in h.edges() if not g.has_edge(u, v)}
        assert added == extra


def test_prove_forbidden_on_simple_cases():
    k4 = entry('F(4,6,1)').graph
    tr = prove_forbidden(k4)
    assert tr is not None and tr.verdict == 'contains-K4'
    tr.replay(k4)

    k23 = entry('F(5,6,1)').graph
    tr = prove_forbidden(k23)
    assert tr is not None and tr.verdict == 'contains-K2,3'
    tr.replay(k23)


def test_replay_rejects_tampered_trace():
    g = entry('F(8,13,1)').graph
    tr = prove_forbidden(g)
    assert tr is not None
    bad = json.loads(tr.to_json())
    bad['steps'][-1]['pair'] = [0, 1]
    with pytest.raises(ValueError):
        ProofTrace(bad['steps'], bad['verdict']).replay(g)


def test_replay_rejects_wrong_graph():
    g = entry('F(8,13,1)').graph
    tr = prove_forbidden(g)
    other = entry('F(9,14,2)').graph
    with pytest.raises(ValueError):
        tr.replay(other)


def test_placement_engine_declines_embeddable_graphs():
    tri = SmallGraph.from_edges(3, [(0, 1), (1, 2), (2, 0)])
    assert placement_contradiction(tri) is None
    diamond = SmallGraph.from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3),
                                        (1, 3)])
    assert placement_contradiction(diamond) is None


def test_prove_forbidden_none_on_unit_distance_samples():
    # quick soundness spot-check; the full 200-graph control corpus runs in
    # the acceptance suite
    from unitdist.certify import g27_pointset
    ps = g27_pointset()
    rng = np.random.default_rng(7)
    checked = 0
    while checked < 25:
        verts = list(rng.choice(ps.n, size=int(rng.integers(5, 10)),
                                replace=False))
        idx = {v: i for i, v in enumerate(verts)}
        edges = [(idx[i], idx[j]) for i, j in ps.unit_pairs
                 if i in idx and j in idx]
        if len(edges) < len(verts):
            continue
        g = SmallGraph.from_edges(len(verts), edges)
        assert prove_forbidden(g) is None
        checked += 1


def test_proof_trace_round_trips_through_json():
    g = entry('F(9,14,2)').graph
    tr = prove_forbidden(g)
    data = json.loads(tr.to_json())
    ProofTrace(data['steps'], data['verdict']).replay(g)
