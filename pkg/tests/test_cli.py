import json

import pytest

from conftest import run_cli
from unitdist.catalog import entry
from unitdist.certify import h_graphs
from unitdist.cli import classify_graph, _render_svg, _render_tikz
from unitdist.graphs import SmallGraph, from_graph6, to_graph6


def g6(g):
    return to_graph6(g).decode()


def test_classify_k4_forbidden():
    rc, reports, _ = run_cli(['classify', 'C~'])
    assert rc == 0
    assert reports[0]['verdict'] == 'forbidden'
    assert reports[0]['blocks'][0]['evidence']['entry'] == 'F(4,6,1)'


def test_classify_exceptional_graph_is_unit_distance():
    # one of the two 9-vertex graphs outside every witness: embeddable,
    # but only via its published exact coordinates / a numeric solve
    ps, edges = h_graphs()['H2']
    g = SmallGraph.from_edges(9, edges)
    report = classify_graph(g)
    assert report['verdict'] == 'unit-distance'


def test_classify_catalog_member_forbidden():
    g = entry('F(9,15,34)').graph
    report = classify_graph(g)
    assert report['verdict'] == 'forbidden'
    assert report['blocks'][0]['evidence']['kind'] == 'catalog-hit'


def test_classify_is_isomorphism_invariant():
    g = entry('F(8,13,9)').graph
    perm = [3, 1, 4, 0, 7, 2, 6, 5]
    h = g.relabel(perm)
    assert classify_graph(g)['verdict'] == classify_graph(h)['verdict'] \
        == 'forbidden'


def test_classify_block_combination():
    # two triangles joined at a cut vertex: both blocks unit-distance
    bowtie = SmallGraph.from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4),
                                       (4, 2)])
    report = classify_graph(bowtie)
    assert report['verdict'] == 'unit-distance'
    assert len(report['blocks']) == 2

    # K4 hanging off a path: forbidden overall
    k4_tail = SmallGraph.from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 2),
                                        (1, 3), (2, 3), (3, 4), (4, 5)])
    assert classify_graph(k4_tail)['verdict'] == 'forbidden'


def test_prove_cli_exit_codes():
    rc, reports, _ = run_cli(['prove', 'C~'])
    assert rc == 0 and reports[0]['replayed']
    # a plain triangle has no forbiddenness proof
    rc, reports, _ = run_cli(['prove', 'Bw'])
    assert rc == 2 and reports[0]['proof'] is None


def test_embed_cli():
    rc, reports, _ = run_cli(['embed', 'Bw'])
    assert rc == 0
    assert reports[0]['residual'] < 1e-9
    rc, reports, _ = run_cli(['embed', 'C~', '--budget', '20'])
    assert rc == 2


def test_verify_cli_table1():
    rc, reports, _ = run_cli(['verify', 'table1'])
    assert rc == 0 and reports[0]['ok']


def test_enumerate_cli(tmp_path):
    out = tmp_path / 'b7.g6'
    rc, _, _ = run_cli(['enumerate', '7', '--filt', 'biconnected',
                        '--out', str(out)])
    assert rc == 0
    lines = out.read_text().splitlines()
    assert len(lines) == len(set(lines))
    assert lines == sorted(lines)


def test_catalog_cli_lists_74():
    rc, reports, _ = run_cli(['catalog'])
    assert rc == 0 and len(reports) == 74


def test_render_formats_are_deterministic():
    coords = [(0, 0), (1, 0), (0.5, 0.8660254)]
    edges = [(0, 1), (1, 2), (0, 2)]
    assert _render_svg(coords, edges) == _render_svg(coords, edges)
    tikz = _render_tikz(coords, edges)
    assert tikz.count('\\draw') == 3 and tikz.count('\\node') == 3
    svg = _render_svg(coords, edges)
    assert svg.count('<line') == 3 and svg.count('<circle') == 3


def test_render_cli_runs(tmp_path):
    out = tmp_path / 'h1.svg'
    rc, _, _ = run_cli(['render', '--target', 'h1', '--out', str(out)])
    assert rc == 0
    assert out.read_text().startswith('<svg')


def test_witness_cli_covers_corpus(tmp_path):
    corpus = tmp_path / 'corpus.g6'
    tri_plus = SmallGraph.from_edges(4, [(0, 1), (1, 2), (2, 0), (0, 3),
                                         (1, 3)])
    corpus.write_text(g6(tri_plus) + '\n')
    base = tmp_path / 'base.json'
    base.write_text(json.dumps(
        {'points': [[0, 0], [1, 0], [0.5, 0.8660254037844386]]}))
    rc, reports, _ = run_cli(['witness', 'extend', '--base', str(base),
                              '--corpus', str(corpus)])
    assert rc == 0
    assert reports[0]['covered'] == 1
