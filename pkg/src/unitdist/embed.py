"""Numerical unit-distance embedding and fixed witness point sets.

Embeddings are found by damped least squares on the squared-distance
residuals (|pu - pv|^2 - 1 per edge), with vertex 0 pinned at the origin
and vertex 1 on the x-axis to quotient out rigid motions.  A PointSet is a
named witness whose certified unit-distance pairs define a host graph;
embedding a graph into a host reduces to subgraph matching.
"""

from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import least_squares

from .graphs import SmallGraph, find_subgraph

SEPARATION = 1e-7   # minimum pairwise point distance for injectivity
RESIDUAL_OK = 1e-9  # max |edge length - 1| for a successful embedding
DEFAULT_BUDGET = 1000


@dataclass
class Embedding:
    coords: np.ndarray        # (n, 2)
    residual: float           # max over edges of ||pu - pv| - 1|
    distinct_ok: bool


def edge_residual(coords, edges):
    if not edges:
        return 0.0
    d = np.array([np.hypot(*(coords[u] - coords[v])) for u, v in edges])
    return float(np.max(np.abs(d - 1.0)))


def min_separation(coords):
    n = len(coords)
    if n < 2:
        return np.inf
    d = np.inf
    for i in range(n):
        for j in range(i + 1, n):
            d = min(d, float(np.hypot(*(coords[i] - coords[j]))))
    return d


def _two_cuts(g):
    """All (a, b, side) where removing {a, b} disconnects g and side is one
    of the resulting components (as a vertex tuple)."""
    cuts = []
    for a in range(g.n):
        for b in range(a + 1, g.n):
            rem = [v for v in range(g.n) if v not in (a, b)]
            unseen = set(rem)
            while unseen:
                stack = [unseen.pop()]
                comp = set(stack)
                while stack:
                    v = stack.pop()
                    for w in rem:
                        if w not in comp and g.has_edge(v, w):
                            comp.add(w)
                            stack.append(w)
                            unseen.discard(w)
                if unseen:  # more than one component: record this one
                    cuts.append((a, b, tuple(sorted(comp))))
    return cuts


def _reflect_side(p, a, b, side):
    """Reflect the points of side across the line through p[a], p[b]."""
    pa, pb = p[a], p[b]
    d = pb - pa
    nrm = float(d @ d)
    if nrm < 1e-14:
        return None
    q = p.copy()
    for v in side:
        w = p[v] - pa
        q[v] = 2 * (pa + (float(w @ d) / nrm) * d) - p[v]
    return q


def _unfold(p, g, cuts, rng, tries=60):
    """Escape coincident points by flipping folds across 2-cuts.

    A solution with residual ~0 but coincident points is usually a fold of a
    valid embedding: reflecting one side of a 2-vertex cut across the hinge
    line preserves every edge length exactly.  Random-walks the fold states.
    """
    for _ in range(tries):
        if min_separation(p) >= SEPARATION:
            return p
        if not cuts:
            return None
        a, b, side = cuts[rng.integers(len(cuts))]
        q = _reflect_side(p, a, b, side)
        if q is not None:
            p = q
    return None


def solve_numeric(g, seed=0, budget=DEFAULT_BUDGET):
    """Embedding of g with residual < 1e-9 and distinct points, else None.

    Deterministic for a fixed seed.  Failure is evidence only, never a
    forbiddenness claim.
    """
    n = g.n
    edges = g.edges()
    if n == 1:
        return Embedding(np.zeros((1, 2)), 0.0, True)
    nvar = 2 * n - 3  # v1 slides on the x-axis, v2.. are free

    def unpack(x):
        p = np.zeros((n, 2))
        p[1, 0] = x[0]
        if n > 2:
            p[2:] = x[1:].reshape(n - 2, 2)
        return p

    ea = np.array(edges, dtype=np.int64) if edges else np.zeros((0, 2), int)

    def fun(x):
        p = unpack(x)
        d = p[ea[:, 0]] - p[ea[:, 1]]
        return (d * d).sum(axis=1) - 1.0

    method = 'lm' if len(edges) >= nvar else 'trf'
    rng = np.random.default_rng(seed)
    cuts = None
    for _ in range(budget):
        x0 = rng.uniform(-2.0, 2.0, size=nvar)
        res = least_squares(fun, x0, method=method,
                            xtol=1e-15, ftol=1e-15, gtol=1e-15)
        p = unpack(res.x)
        r = edge_residual(p, edges)
        if r >= RESIDUAL_OK:
            continue
        if min_separation(p) >= SEPARATION:
            return Embedding(p, r, True)
        if cuts is None:
            cuts = _two_cuts(g)
        p = _unfold(p, g, cuts, rng)
        if p is not None:
            r = edge_residual(p, edges)
            if r < RESIDUAL_OK and min_separation(p) >= SEPARATION:
                return Embedding(p, r, True)
    return None


def circle_intersect(c1, c2):
    """Intersection points of the two unit circles centered at c1, c2."""
    c1 = np.asarray(c1, dtype=float)
    c2 = np.asarray(c2, dtype=float)
    d = float(np.hypot(*(c2 - c1)))
    if d == 0.0 or d > 2.0:
        return []
    if d == 2.0:
        return [tuple((c1 + c2) / 2)]
    a = d / 2.0
    h = np.sqrt(max(0.0, 1.0 - a * a))
    mid = (c1 + c2) / 2.0
    ux, uy = (c2 - c1) / d
    p1 = (mid[0] - h * uy, mid[1] + h * ux)
    if h == 0.0:
        return [p1]
    p2 = (mid[0] + h * uy, mid[1] - h * ux)
    return [p1, p2]


@dataclass
class PointSet:
    """A named witness: points with a certified unit-pair host graph."""
    name: str
    points: list                 # AlgebraicPoint-like; opaque here
    approx: np.ndarray           # (n, 2) float coordinates
    unit_pairs: tuple            # ((i, j), ...) certified distance-1 pairs
    _adj: list = field(default=None, repr=False)

    @property
    def n(self):
        return len(self.approx)

    @property
    def adj(self):
        if self._adj is None:
            masks = [0] * self.n
            for i, j in self.unit_pairs:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
            self._adj = masks
        return self._adj


def numeric_pointset(name, approx, tol=1e-6):
    """PointSet from plain float coordinates; unit pairs by tolerance."""
    approx = np.asarray(approx, dtype=float)
    pairs = []
    for i in range(len(approx)):
        for j in range(i + 1, len(approx)):
            if abs(np.hypot(*(approx[i] - approx[j])) - 1.0) < tol:
                pairs.append((i, j))
    return PointSet(name, list(map(tuple, approx)), approx, tuple(pairs))


def embed_into(g, host):
    """Injective vertex -> point map sending edges of g to host unit pairs.

    Exhaustive, so None proves g is not a subgraph of the host graph.
    Non-adjacent vertices may land on unit pairs (unfaithful is fine).
    """
    if g.n > host.n:
        return None
    return find_subgraph(g, host.n, host.adj)


def extend_witness(host, g):
    """New point making g embeddable, from the degree-2 growth step.

    Requires a degree-2 vertex v of g with g - v embeddable into host; the
    new point is a unit-circle intersection around the images of v's two
    neighbors, separated from all existing points.  Returns
    (point, (parent_i, parent_j)) or None.
    """
    for v in range(g.n):
        if g.degree(v) != 2:
            continue
        keep = [u for u in range(g.n) if u != v]
        rest = g.subgraph(keep)
        w = embed_into(rest, host)
        if w is None:
            continue
        # w[k] is the host point for keep[k]
        nb = [u for u in range(g.n) if g.has_edge(u, v)]
        i, j = (w[keep.index(nb[0])], w[keep.index(nb[1])])
        for p in circle_intersect(host.approx[i], host.approx[j]):
            sep = min(np.hypot(p[0] - q[0], p[1] - q[1]) for q in host.approx)
            if sep >= SEPARATION:
                return p, (i, j)
    return None


def grow_witness(approx, corpus, tol=1e-6):
    """Iterate the degree-2 extension over a corpus until a fixed point.

    Returns (final coords, covered) where covered[i] says whether corpus[i]
    embeds into the final witness.  Deterministic given corpus order.
    """
    pts = [tuple(p) for p in np.asarray(approx, dtype=float)]
    while True:
        host = numeric_pointset('grown', pts, tol)
        added = False
        for g in corpus:
            if embed_into(g, host) is not None:
                continue
            ext = extend_witness(host, g)
            if ext is not None:
                pts.append(tuple(ext[0]))
                host = numeric_pointset('grown', pts, tol)
                added = True
        if not added:
            break
    host = numeric_pointset('grown', pts, tol)
    covered = [embed_into(g, host) is not None for g in corpus]
    return np.asarray(pts), covered
