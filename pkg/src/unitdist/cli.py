"""Command-line interface: enumeration, classification, proofs, witnesses,
certified verification, rendering, and the full count-reproduction pipeline.

Reports are JSON lines on stdout; graphs travel as graph6.  Exit codes:
0 = success / all golden counts matched, 2 = classification or proof left
undecided, 3 = a verification or count check failed.
"""

import argparse
import json
import os
import sys

import numpy as np

from . import catalog as cat
from . import certify, embed, gen, reasoner
from .graphs import (SmallGraph, blocks, canonical_form, canonical_graph,
                     from_graph6, to_graph6, are_isomorphic, is_biconnected)

GOLDEN = {
    ('biconnected', 8): 7123,
    ('biconnected', 9): 194066,
    ('free', 8): 366,
    ('free', 9): 2984,
    ('outside-g27', 9): 275,
    ('outside-g118', 9): 2,
}


def _emit(obj, out=None):
    (out or sys.stdout).write(json.dumps(obj) + '\n')


def _g6(g):
    s = to_graph6(g)
    return s.decode() if isinstance(s, bytes) else s


def _canon_g6(g):
    return _g6(canonical_graph(g))


# ------------------------------------------------------------- subcommands --

def cmd_enumerate(args):
    graphs = gen.generate(args.n, args.filt, threads=args.threads)
    lines = [_g6(g) for g in graphs]
    if args.out:
        with open(args.out, 'w') as f:
            f.write('\n'.join(lines) + ('\n' if lines else ''))
    else:
        for line in lines:
            print(line)
    _emit({'op': 'enumerate', 'n': args.n, 'filter': args.filt,
           'count': len(lines), 'out': args.out}, sys.stderr)
    return 0


def cmd_catalog(args):
    entries = cat.load_catalog()
    if args.validate_minimality:
        bad = []
        for e in entries:
            for (u, v) in e.graph.edges():
                sub = e.graph.delete_edge(u, v)
                emb = embed.solve_numeric(sub, seed=0, budget=args.budget)
                if emb is None:
                    bad.append({'id': e.id, 'deleted_edge': [u, v]})
        _emit({'op': 'catalog', 'check': 'minimality',
               'entries': len(entries), 'failures': bad, 'ok': not bad})
        return 0 if not bad else 3
    for e in entries:
        _emit({'id': e.id, 'n': e.n, 'm': e.m, 'graph6': _g6(e.graph)})
    return 0


def _classify_block(g, budget):
    """Classify one biconnected block; returns (verdict, evidence dict)."""
    hit = cat.find_forbidden(g)
    if hit is not None:
        e, w = hit
        return 'forbidden', {'kind': 'catalog-hit', 'entry': e.id,
                             'witness': list(w)}
    for host_name, host in (('g27', certify.g27_pointset),
                            ('g118', certify.g118_pointset)):
        if g.n > 9:
            break
        w = embed.embed_into(g, host())
        if w is not None:
            return 'unit-distance', {'kind': 'host-embedding',
                                     'host': host_name, 'witness': list(w)}
    emb = embed.solve_numeric(g, seed=0, budget=budget)
    if emb is not None:
        return 'unit-distance', {'kind': 'numeric-embedding',
                                 'residual': emb.residual,
                                 'coords': emb.coords.tolist()}
    trace = reasoner.prove_forbidden(g)
    if trace is not None:
        return 'forbidden', {'kind': 'proof',
                             'trace': json.loads(trace.to_json())}
    return 'undecided-evidence', {'kind': 'none',
                                  'note': 'no embedding found, no proof'}


def classify_graph(g, budget=embed.DEFAULT_BUDGET):
    """ClassificationReport dict for one graph (any n; definitive for n<=9).

    Block-decomposes and classifies each block: a graph is unit-distance
    iff every biconnected block is.  A catalog hit proves forbiddenness at
    any n; unit-distance verdicts carry an explicit embedding or host
    witness as evidence.
    """
    report = {'graph6': _g6(g), 'n': g.n, 'm': g.num_edges(),
              'blocks': []}
    verdicts = set()
    for bverts in blocks(g):
        sub = g.subgraph(bverts)
        if sub.n <= 2:
            verdict, ev = 'unit-distance', {'kind': 'trivial'}
        else:
            verdict, ev = _classify_block(sub, budget)
        report['blocks'].append({'vertices': list(bverts),
                                 'verdict': verdict, 'evidence': ev})
        verdicts.add(verdict)
    if 'forbidden' in verdicts:
        report['verdict'] = 'forbidden'
    elif verdicts <= {'unit-distance'}:
        report['verdict'] = 'unit-distance'
    else:
        report['verdict'] = 'undecided-evidence'
    return report


def cmd_classify(args):
    rc = 0
    for g6 in args.graphs:
        report = classify_graph(from_graph6(g6), budget=args.budget)
        _emit(report)
        if report['verdict'] == 'undecided-evidence':
            rc = 2
    return rc


def cmd_prove(args):
    rc = 0
    for g6 in args.graphs:
        g = from_graph6(g6)
        trace = reasoner.prove_forbidden(g)
        if trace is None:
            _emit({'graph6': g6, 'proof': None})
            rc = 2
            continue
        trace.replay(g)  # self-check before reporting
        _emit({'graph6': g6, 'proof': json.loads(trace.to_json()),
               'replayed': True})
    return rc


def cmd_embed(args):
    rc = 0
    for g6 in args.graphs:
        g = from_graph6(g6)
        emb = embed.solve_numeric(g, seed=args.seed, budget=args.budget)
        if emb is None:
            _emit({'graph6': g6, 'coords': None})
            rc = 2
        else:
            _emit({'graph6': g6, 'coords': emb.coords.tolist(),
                   'residual': emb.residual})
    return rc


def _named_pointset(name):
    if name == 'g27':
        return certify.g27_pointset()
    if name == 'g118':
        return certify.g118_pointset()
    if name in ('h1', 'h2'):
        return certify.h_graphs()[name.upper()][0]
    with open(name) as f:
        data = json.load(f)
    return embed.numeric_pointset(os.path.basename(name),
                                  np.asarray(data['points']))


def cmd_witness(args):
    host = _named_pointset(args.base)
    with open(args.corpus) as f:
        corpus = [from_graph6(line.strip()) for line in f if line.strip()]
    coords, covered = embed.grow_witness(host.approx, corpus)
    result = {'op': 'witness-extend', 'base': args.base,
              'points': coords.tolist(),
              'added': len(coords) - host.n,
              'covered': int(sum(covered)), 'corpus': len(corpus)}
    if args.out:
        with open(args.out, 'w') as f:
            json.dump({'points': coords.tolist()}, f)
        result['out'] = args.out
    _emit(result)
    return 0 if all(covered) else 2


def cmd_verify(args):
    targets = (['table1', 'table2', 'h1', 'h2'] if args.target == 'all'
               else [args.target])
    ok = True
    for t in targets:
        if t == 'table1':
            rep = certify.verify_table1()
        elif t == 'table2':
            pts = certify.extension_points()
            rep = certify.verify_points(pts, 'table2')
        else:
            ps, edges = certify.h_graphs()[t.upper()]
            rep = certify.verify_edges(ps, edges, t)
        _emit(rep)
        ok = ok and rep.get('ok', False)
    return 0 if ok else 3


def _render_svg(coords, edges, scale=120.0):
    pts = np.asarray(coords, dtype=float)
    lo = pts.min(axis=0) - 0.2
    hi = pts.max(axis=0) + 0.2
    # svg y grows downward: flip
    def sx(p):
        return (p[0] - lo[0]) * scale
    def sy(p):
        return (hi[1] - p[1]) * scale
    w, h = (hi - lo) * scale
    out = ['<svg xmlns="http://www.w3.org/2000/svg" '
           'width="%.0f" height="%.0f">' % (w, h)]
    for u, v in edges:
        out.append('<line x1="%.2f" y1="%.2f" x2="%.2f" y2="%.2f" '
                   'stroke="black" stroke-width="1.5"/>' %
                   (sx(pts[u]), sy(pts[u]), sx(pts[v]), sy(pts[v])))
    for p in pts:
        out.append('<circle cx="%.2f" cy="%.2f" r="3.5" fill="black"/>' %
                   (sx(p), sy(p)))
    out.append('</svg>')
    return '\n'.join(out) + '\n'


def _render_tikz(coords, edges):
    out = ['\\begin{tikzpicture}[scale=2]']
    for i, (x, y) in enumerate(coords):
        out.append('\\node[circle,fill,inner sep=1pt] (%d) at (%.5f,%.5f) {};'
                   % (i, x, y))
    for u, v in edges:
        out.append('\\draw (%d) -- (%d);' % (u, v))
    out.append('\\end{tikzpicture}')
    return '\n'.join(out) + '\n'


def cmd_render(args):
    if args.target:
        ps = _named_pointset(args.target)
        coords, edges = ps.approx, list(ps.unit_pairs)
    else:
        g = from_graph6(args.graph)
        emb = embed.solve_numeric(g, seed=args.seed, budget=args.budget)
        if emb is None:
            _emit({'op': 'render', 'graph6': args.graph,
                   'error': 'no embedding found'})
            return 2
        coords, edges = emb.coords, g.edges()
    doc = (_render_svg(coords, edges) if args.format == 'svg'
           else _render_tikz(coords, edges))
    if args.out:
        with open(args.out, 'w') as f:
            f.write(doc)
    else:
        sys.stdout.write(doc)
    return 0


# -------------------------------------------------------------- reproduce --

def _write_artifact(path, lines):
    with open(path, 'w') as f:
        f.write('\n'.join(lines) + ('\n' if lines else ''))


def _reproduce_stage(n, outdir, threads, summary):
    import time
    entries = [e for e in cat.load_catalog() if e.n <= n]
    t0 = time.time()
    graphs = gen.generate(n, 'biconnected', threads=threads)
    summary.append({'stage': n, 'step': 'biconnected', 'count': len(graphs),
                    'golden': GOLDEN[('biconnected', n)],
                    'seconds': round(time.time() - t0, 1)})
    _write_artifact(os.path.join(outdir, 'biconnected%d.g6' % n),
                    [_g6(g) for g in graphs])

    t0 = time.time()
    free = [g for g in graphs if cat.is_free(g, entries)]
    summary.append({'stage': n, 'step': 'free', 'count': len(free),
                    'golden': GOLDEN[('free', n)],
                    'seconds': round(time.time() - t0, 1)})
    _write_artifact(os.path.join(outdir, 'free%d.g6' % n),
                    [_g6(g) for g in free])

    t0 = time.time()
    g27 = certify.g27_pointset()
    outside = [g for g in free if embed.embed_into(g, g27) is None]
    if n == 8:
        summary.append({'stage': n, 'step': 'outside-g27',
                        'count': len(outside), 'golden': 0,
                        'seconds': round(time.time() - t0, 1)})
        return
    summary.append({'stage': n, 'step': 'outside-g27', 'count': len(outside),
                    'golden': GOLDEN[('outside-g27', n)],
                    'seconds': round(time.time() - t0, 1)})
    _write_artifact(os.path.join(outdir, 'outside-g27.g6'),
                    sorted(_g6(g) for g in outside))

    t0 = time.time()
    g118 = certify.g118_pointset()
    hard = [g for g in outside if embed.embed_into(g, g118) is None]
    summary.append({'stage': n, 'step': 'outside-g118', 'count': len(hard),
                    'golden': GOLDEN[('outside-g118', n)],
                    'seconds': round(time.time() - t0, 1)})
    _write_artifact(os.path.join(outdir, 'outside-g118.g6'),
                    sorted(_g6(g) for g in hard))

    hs = certify.h_graphs()
    hgraphs = {name: SmallGraph.from_edges(9, edges)
               for name, (ps, edges) in hs.items()}
    matched = sorted(name for g in hard for name in hgraphs
                     if are_isomorphic(g, hgraphs[name]))
    summary.append({'stage': n, 'step': 'exceptional-pair',
                    'matched': matched, 'golden': ['H1', 'H2']})


def cmd_reproduce(args):
    outdir = args.artifacts
    os.makedirs(outdir, exist_ok=True)
    stages = [8, 9] if args.stage == 'all' else [int(args.stage)]
    summary = []
    for n in stages:
        _reproduce_stage(n, outdir, args.threads, summary)
    ok = True
    for row in summary:
        _emit(row)
        if 'count' in row and row['count'] != row['golden']:
            ok = False
        if 'matched' in row and row['matched'] != row['golden']:
            ok = False
    _emit({'op': 'reproduce', 'stages': stages, 'ok': ok,
           'artifacts': outdir})
    return 0 if ok else 3


# ------------------------------------------------------------------- main --

def _parser():
    ap = argparse.ArgumentParser(
        prog='unitdist',
        description='Classify graphs on few vertices as unit-distance or '
                    'forbidden.')
    sub = ap.add_subparsers(dest='cmd', required=True)

    p = sub.add_parser('enumerate', help='isomorph-free graph generation')
    p.add_argument('n', type=int)
    p.add_argument('--filt', default='biconnected',
                   choices=['all', 'connected', 'biconnected'])
    p.add_argument('--threads', type=int, default=None)
    p.add_argument('--out')
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser('catalog', help='list or validate the catalog')
    p.add_argument('--validate-minimality', action='store_true')
    p.add_argument('--budget', type=int, default=embed.DEFAULT_BUDGET)
    p.set_defaults(fn=cmd_catalog)

    p = sub.add_parser('classify', help='unit-distance / forbidden verdict')
    p.add_argument('graphs', nargs='+', metavar='graph6')
    p.add_argument('--budget', type=int, default=embed.DEFAULT_BUDGET)
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser('prove', help='replayable forbiddenness proof')
    p.add_argument('graphs', nargs='+', metavar='graph6')
    p.set_defaults(fn=cmd_prove)

    p = sub.add_parser('embed', help='numeric unit-distance embedding')
    p.add_argument('graphs', nargs='+', metavar='graph6')
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--budget', type=int, default=embed.DEFAULT_BUDGET)
    p.set_defaults(fn=cmd_embed)

    p = sub.add_parser('witness', help='grow a witness point set')
    p.add_argument('action', choices=['extend'])
    p.add_argument('--base', required=True,
                   help='g27, g118, or a JSON point file')
    p.add_argument('--corpus', required=True, help='graph6 lines file')
    p.add_argument('--out')
    p.set_defaults(fn=cmd_witness)

    p = sub.add_parser('verify', help='certified coordinate verification')
    p.add_argument('target', choices=['table1', 'table2', 'h1', 'h2', 'all'])
    p.add_argument('--precision-bits', type=int, default=1024)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser('render', help='draw an embedding or point set')
    p.add_argument('--target', help='g27, g118, h1, h2, or a JSON file')
    p.add_argument('--graph', help='graph6 to embed and draw')
    p.add_argument('--format', default='svg', choices=['svg', 'tikz'])
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--budget', type=int, default=embed.DEFAULT_BUDGET)
    p.add_argument('--out')
    p.set_defaults(fn=cmd_render)

    p = sub.add_parser('reproduce', help='re-derive the published counts')
    p.add_argument('stage', nargs='?', default='all', choices=['8', '9', 'all'])
    p.add_argument('--threads', type=int, default=None)
    p.add_argument('--artifacts', default='artifacts')
    p.set_defaults(fn=cmd_reproduce)

    return ap


def main(argv=None):
    args = _parser().parse_args(argv)
    if args.cmd == 'render' and not (args.target or args.graph):
        _parser().error('render needs --target or --graph')
    return args.fn(args)


if __name__ == '__main__':
    sys.exit(main())
