"""The catalog of 74 minimal forbidden graphs and containment filtering.

A graph on at most 9 vertices is forbidden exactly when it contains a
catalog member as a (not necessarily induced) subgraph.  Entries are ordered
by (n, m, index); the two smallest members K4 and K2,3 get dedicated
bit-twiddling checks because they dispatch the overwhelming majority of
dense graphs during the big sweeps.
"""

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .graphs import SmallGraph, find_subgraph, to_graph6


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    n: int
    m: int
    index: int
    source: str
    graph: SmallGraph
    coords: tuple  # drawn layout (not a unit embedding for forbidden graphs)


def _data(name):
    return resources.files('unitdist.data').joinpath(name).read_text()


@lru_cache(maxsize=None)
def load_catalog():
    """All 74 entries, ordered by (n, m, index)."""
    raw = json.loads(_data('catalog.json'))
    entries = []
    for e in raw:
        g = SmallGraph.from_edges(e['n'], [tuple(x) for x in e['edges']])
        entries.append(CatalogEntry(
            id=e['id'], n=e['n'], m=e['m'], index=e['index'],
            source=e['source'], graph=g,
            coords=tuple(tuple(c) for c in e['coords'])))
    assert len(entries) == 74
    return entries


@lru_cache(maxsize=None)
def entry(id_):
    for e in load_catalog():
        if e.id == id_:
            return e
    raise KeyError(id_)


def _has_k4(g):
    for u in range(g.n):
        au = g.adj[u] >> (u + 1) << (u + 1)  # neighbors above u
        m = au
        while m:
            b = m & -m
            v = b.bit_length() - 1
            m ^= b
            common = g.adj[u] & g.adj[v]
            c = common
            while c:
                cb = c & -c
                w = cb.bit_length() - 1
                c ^= cb
                if common & g.adj[w] & ~(1 << u) & ~(1 << v) & ~cb:
                    return True
    return False


def _k4_witness(g):
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.has_edge(u, v):
                continue
            common = g.adj[u] & g.adj[v]
            for w in range(v + 1, g.n):
                if not common >> w & 1:
                    continue
                rest = common & g.adj[w]
                if rest:
                    x = (rest & -rest).bit_length() - 1
                    return (u, v, w, x)
    return None


def _k23_witness(g):
    for u in range(g.n):
        for v in range(u + 1, g.n):
            common = g.adj[u] & g.adj[v] & ~(1 << u) & ~(1 << v)
            if bin(common).count('1') >= 3:
                tri = []
                m = common
                while m and len(tri) < 3:
                    b = m & -m
                    tri.append(b.bit_length() - 1)
                    m ^= b
                return (u, v, *tri)
    return None


def find_forbidden(g, entries=None):
    """First catalog entry contained in g, as (entry, witness), else None.

    The witness maps entry vertex -> g vertex and sends entry edges to edges
    of g.  Scan order is (n, m, index) so the reported member is a smallest
    one.
    """
    if entries is None:
        entries = load_catalog()
    gm = g.num_edges()
    gdeg = sorted((bin(a).count('1') for a in g.adj), reverse=True)
    for e in entries:
        if e.n > g.n or e.m > gm:
            continue
        if e.id == 'F(4,6,1)':
            w = _k4_witness(g) if _has_k4(g) else None
            if w:
                return e, w
            continue
        if e.id == 'F(5,6,1)':
            w = _k23_witness(g)
            if w:
                return e, w
            continue
        edeg = sorted((bin(a).count('1') for a in e.graph.adj), reverse=True)
        if any(d > h for d, h in zip(edeg, gdeg)):
            continue
        w = find_subgraph(e.graph, g.n, g.adj)
        if w is not None:
            return e, w
    return None


def is_free(g, entries=None):
    """True when g contains no catalog member."""
    return find_forbidden(g, entries) is None


def catalog_graph6_lines():
    """Canonical graph6 of each entry, in catalog order."""
    from .graphs import canonical_form
    return [canonical_form(e.graph)[0].decode() for e in load_catalog()]
