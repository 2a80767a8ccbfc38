"""Isomorph-free enumeration of small graphs by vertex-addition levels.

Graphs on k+1 vertices are produced by attaching a new vertex to every
subset of each k-vertex parent, canonicalizing each child, and keeping one
representative per canonical code.  Intermediate levels keep all connected
graphs (every connected / biconnected graph has a vertex whose removal
leaves a connected graph, so the ladder is complete); the requested
connectivity filter is applied only at the final level.

Counts are deterministic and independent of the worker count: workers
partition the parent list and the per-worker code sets are unioned.
"""

from concurrent.futures import ThreadPoolExecutor
import os

import numpy as np

from . import _kernels as K
from .graphs import SmallGraph, to_graph6

FILTERS = ('all', 'connected', 'biconnected')

_MODE = {'all': K.ALL, 'connected': K.CONNECTED, 'biconnected': K.BICONNECTED}


def default_threads():
    try:
        return max(1, int(os.environ.get('UNITDIST_THREADS', '1')))
    except ValueError:
        return 1


def _codes(n, filt, threads):
    if filt not in FILTERS:
        raise ValueError('filter must be one of %s' % (FILTERS,))
    if not 1 <= n <= 9:
        raise ValueError('enumeration supports 1 <= n <= 9')
    if n == 1:
        return np.zeros(1, dtype=np.int64)
    inter_mode = K.ALL if filt == 'all' else K.CONNECTED
    parents = np.zeros((1, 1), dtype=np.int64)  # the single 1-vertex graph
    for k in range(1, n):
        final = (k + 1 == n)
        mode = _MODE[filt] if final else inter_mode
        if threads <= 1 or parents.shape[0] < 64:
            codes = K.expand_level(parents, k, mode, final)
        else:
            chunks = np.array_split(parents, threads)
            with ThreadPoolExecutor(threads) as pool:
                parts = list(pool.map(
                    lambda c: K.expand_level(c, k, mode, final),
                    [c for c in chunks if c.shape[0]]))
            codes = np.unique(np.concatenate(parts))
        if not final:
            parents = K.codes_to_adj(codes, k + 1)
    return codes


def count(n, filt='all', threads=None):
    """Number of isomorphism classes of n-vertex graphs passing the filter."""
    return int(_codes(n, filt, threads or default_threads()).shape[0])


def generate(n, filt='all', threads=None):
    """Canonically labeled representatives, sorted by canonical graph6 bytes."""
    codes = _codes(n, filt, threads or default_threads())
    adj = K.codes_to_adj(codes, n)
    graphs = [SmallGraph(n, [int(a) for a in row]) for row in adj]
    graphs.sort(key=to_graph6)
    return graphs
