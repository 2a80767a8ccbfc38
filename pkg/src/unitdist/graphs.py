"""Small immutable graphs on up to 16 vertices with bitmask adjacency.

Provides the graph6 codec, canonical labeling by refinement with
individualization, biconnectivity / block decomposition, and non-induced
subgraph isomorphism.  Everything here is exact combinatorics; no geometry.
"""

from __future__ import annotations

MAX_N = 16


class Graph6Error(ValueError):
    """Malformed graph6 input; carries the byte offset of the problem."""

    def __init__(self, message, offset):
        super().__init__('%s (byte offset %d)' % (message, offset))
        self.offset = offset


class SmallGraph:
    """Immutable undirected simple graph; vertex v's neighbors are bits of adj[v]."""

    __slots__ = ('n', 'adj', '_hash')

    def __init__(self, n, adj):
        if not 0 <= n <= MAX_N:
            raise ValueError('vertex count %d out of range 0..%d' % (n, MAX_N))
        self.n = n
        self.adj = tuple(adj)
        self._hash = hash((n,) + self.adj)

    @classmethod
    def from_edges(cls, n, edges):
        adj = [0] * n
        for u, v in edges:
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise ValueError('bad edge (%d, %d) for n=%d' % (u, v, n))
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    def edges(self):
        out = []
        for u in range(self.n):
            m = self.adj[u] >> (u + 1)
            v = u + 1
            while m:
                if m & 1:
                    out.append((u, v))
                m >>= 1
                v += 1
        return out

    def num_edges(self):
        return sum(bin(a).count('1') for a in self.adj) // 2

    def degree(self, v):
        return bin(self.adj[v]).count('1')

    def degree_sequence(self):
        return tuple(sorted(bin(a).count('1') for a in self.adj))

    def has_edge(self, u, v):
        return bool(self.adj[u] >> v & 1)

    def add_edge(self, u, v):
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return SmallGraph(self.n, adj)

    def add_vertex(self, nbrs):
        """New graph with vertex n adjacent to the bitmask nbrs."""
        bit = 1 << self.n
        adj = [a | bit if nbrs >> v & 1 else a for v, a in enumerate(self.adj)]
        adj.append(nbrs)
        return SmallGraph(self.n + 1, adj)

    def delete_edge(self, u, v):
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return SmallGraph(self.n, adj)

    def subgraph(self, verts):
        """Induced subgraph on the sorted vertex list, relabeled 0..k-1."""
        verts = sorted(verts)
        pos = {v: i for i, v in enumerate(verts)}
        adj = [0] * len(verts)
        for v in verts:
            m = self.adj[v]
            while m:
                b = m & -m
                w = b.bit_length() - 1
                if w in pos:
                    adj[pos[v]] |= 1 << pos[w]
                m ^= b
        return SmallGraph(len(verts), adj)

    def relabel(self, perm):
        """perm[v] = new label of v."""
        adj = [0] * self.n
        for v in range(self.n):
            m = self.adj[v]
            a = 0
            while m:
                b = m & -m
                a |= 1 << perm[b.bit_length() - 1]
                m ^= b
            adj[perm[v]] = a
        return SmallGraph(self.n, adj)

    def __eq__(self, other):
        return (isinstance(other, SmallGraph) and self.n == other.n
                and self.adj == other.adj)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return 'SmallGraph(%d, %s)' % (self.n, self.edges())


# ----------------------------------------------------------------- graph6 --

def to_graph6(g):
    """Encode as graph6 bytes (no trailing newline)."""
    n = g.n
    out = [63 + n]
    bits = []
    for v in range(1, n):
        for u in range(v):
            bits.append(g.adj[u] >> v & 1)
    for i in range(0, len(bits), 6):
        group = bits[i:i + 6] + [0] * (6 - len(bits[i:i + 6]))
        val = 0
        for b in group:
            val = val << 1 | b
        out.append(63 + val)
    return bytes(out)


def from_graph6(data):
    """Decode one graph6 line (bytes or str); tolerates the >>graph6<< header."""
    if isinstance(data, str):
        data = data.encode()
    base = 0
    if data.startswith(b'>>graph6<<'):
        base = 10
        data = data[10:]
    data = data.rstrip(b'\r\n')
    if not data:
        raise Graph6Error('empty graph6 input', base)
    n = data[0] - 63
    if not 0 <= n <= MAX_N:
        raise Graph6Error('unsupported vertex count %d' % n, base)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(data) - 1 != need:
        raise Graph6Error('expected %d data bytes, got %d'
                          % (need, len(data) - 1), base + 1)
    adj = [0] * n
    k = 0
    for i, byte in enumerate(data[1:]):
        val = byte - 63
        if not 0 <= val < 64:
            raise Graph6Error('byte %d out of graph6 range' % byte, base + 1 + i)
        for shift in range(5, -1, -1):
            if k >= nbits:
                if val >> shift & 1:
                    raise Graph6Error('nonzero padding bit', base + 1 + i)
                continue
            if val >> shift & 1:
                # bit k is entry (u, v) in column order
                v = _col_of(k)
                u = k - v * (v - 1) // 2
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            k += 1
    return SmallGraph(n, adj)


def _col_of(k):
    v = 1
    while v * (v + 1) // 2 <= k:
        v += 1
    return v


# ------------------------------------------------------ canonical labeling --

def _refine_colors(n, adj, colors):
    """Iterate 1-WL refinement until stable; colors is a list of small ints.

    The per-vertex key packs (color, neighbor-color multiset) into an int:
    5 bits of multiplicity per neighbor color.  Counts stay below 32 because
    n <= 16.  The fast enumeration kernel mirrors this encoding exactly.
    """
    while True:
        keys = []
        for v in range(n):
            m = adj[v]
            k = (colors[v] + 1) << (5 * (n + 1))
            while m:
                b = m & -m
                k += 1 << (5 * (colors[b.bit_length() - 1] + 1))
                m ^= b
            keys.append(k)
        order = sorted(set(keys))
        lookup = {k: i for i, k in enumerate(order)}
        new = [lookup[k] for k in keys]
        if new == colors:
            return colors
        colors = new


def _code(n, adj, perm):
    """Upper-triangle bits of the relabeled graph packed into one int."""
    inv = [0] * n
    for v, p in enumerate(perm):
        inv[p] = v
    code = 0
    for a in range(n):
        ra = adj[inv[a]]
        for b in range(a + 1, n):
            code = code << 1 | (ra >> inv[b] & 1)
    return code


def canonical_form(g):
    """Canonical labeling.

    Returns (canonical graph6 bytes, perm) where perm[v] is the canonical
    label of vertex v and the graph6 encodes g relabeled by perm.  The
    canonical labeling maximizes the packed upper-triangle adjacency code
    over labelings compatible with iterated color refinement.
    """
    n, adj = g.n, g.adj
    if n <= 1:
        return to_graph6(g), tuple(range(n))
    colors = _refine_colors(n, adj, [bin(a).count('1') for a in adj])

    best = [-1, None]

    def _perm_from_order(order):
        perm = [0] * n
        for pos, v in enumerate(order):
            perm[v] = pos
        return perm

    def rec(order, placed_mask, colors):
        if len(order) == n:
            code = _code(n, adj, _perm_from_order(order))
            if code > best[0]:
                best[0] = code
                best[1] = list(order)
            return
        # target cell: unplaced vertices of the minimal color
        cell = []
        cmin = None
        for v in range(n):
            if placed_mask >> v & 1:
                continue
            if cmin is None or colors[v] < cmin:
                cmin = colors[v]
                cell = [v]
            elif colors[v] == cmin:
                cell.append(v)
        tried = []
        for v in cell:
            # twin pruning: skip v if swapping with an already-tried cell
            # member is an automorphism
            skip = False
            for u in tried:
                au = adj[u] & ~(1 << v)
                av = adj[v] & ~(1 << u)
                if au == av:
                    skip = True
                    break
            if skip:
                continue
            tried.append(v)
            order.append(v)
            ind = list(colors)
            ind[v] = -1
            rec(order, placed_mask | 1 << v, _refine_colors(n, adj, ind))
            order.pop()

    rec([], 0, colors)
    perm = tuple(_perm_from_order(best[1]))
    return to_graph6(g.relabel(perm)), perm


def canonical_graph(g):
    """g relabeled canonically."""
    _, perm = canonical_form(g)
    return g.relabel(perm)


def are_isomorphic(g, h):
    return g.n == h.n and canonical_form(g)[0] == canonical_form(h)[0]


# --------------------------------------------------------- connectivity ----

def is_connected(g):
    if g.n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        m = frontier
        while m:
            b = m & -m
            nxt |= g.adj[b.bit_length() - 1]
            m ^= b
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def articulation_points(g):
    """Bitmask of cut vertices (Hopcroft-Tarjan, iterative)."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    cuts = 0
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        stack = [(root, g.adj[root])]
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        while stack:
            v, rest = stack[-1]
            if rest:
                b = rest & -rest
                stack[-1] = (v, rest ^ b)
                w = b.bit_length() - 1
                if disc[w] == -1:
                    parent[w] = v
                    if v == root:
                        root_children += 1
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, g.adj[w]))
                elif w != parent[v]:
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                p = parent[v]
                if p != -1:
                    low[p] = min(low[p], low[v])
                    if p != root and low[v] >= disc[p]:
                        cuts |= 1 << p
        if root_children > 1:
            cuts |= 1 << root
    return cuts


def is_biconnected(g):
    """No articulation point and connected.

    Graphs on one or two vertices count as biconnected when connected, which
    matches the convention of standard generation tools.
    """
    if g.n <= 2:
        return is_connected(g)
    return is_connected(g) and articulation_points(g) == 0


def blocks(g):
    """Vertex sets (sorted tuples) of the blocks (biconnected components).

    Isolated vertices form their own single-vertex blocks.
    """
    n = g.n
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    timer = 0
    estack = []
    out = []
    touched = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        if g.adj[root] == 0:
            out.append((root,))
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, g.adj[root])]
        while stack:
            v, rest = stack[-1]
            if rest:
                b = rest & -rest
                stack[-1] = (v, rest ^ b)
                w = b.bit_length() - 1
                if disc[w] == -1:
                    parent[w] = v
                    disc[w] = low[w] = timer
                    timer += 1
                    estack.append((v, w))
                    stack.append((w, g.adj[w]))
                elif w != parent[v] and disc[w] < disc[v]:
                    estack.append((v, w))
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                p = parent[v]
                if p != -1:
                    low[p] = min(low[p], low[v])
                    if low[v] >= disc[p]:
                        verts = 0
                        while estack and disc[estack[-1][0]] >= disc[v]:
                            a, b_ = estack.pop()
                            verts |= 1 << a | 1 << b_
                        if estack and estack[-1] == (p, v):
                            estack.pop()
                        verts |= 1 << p | 1 << v
                        out.append(tuple(_bits(verts)))
    return out


def _bits(mask):
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


# ------------------------------------------------- subgraph isomorphism ----

def find_subgraph(pattern, host_n, host_adj, forbid=None):
    """Injective map sending pattern edges to host edges, or None.

    pattern is a SmallGraph; the host is given as (host_n, host_adj) so that
    hosts larger than 16 vertices (unit-pair graphs of point sets) work too.
    Non-induced: host may have extra edges.  Returns a tuple mapping pattern
    vertex -> host vertex.  forbid, if given, is a set of mappings (tuples)
    to skip, used by callers that enumerate witnesses.
    """
    pn = pattern.n
    if pn > host_n:
        return None
    padj = pattern.adj
    pdeg = [bin(a).count('1') for a in padj]
    hdeg = [bin(a).count('1') for a in host_adj]
    full = (1 << host_n) - 1
    # static order: most-constrained first (high degree, then connectivity)
    order = []
    remaining = set(range(pn))
    while remaining:
        placed_mask = 0
        for v in order:
            placed_mask |= 1 << v
        bestv = max(remaining, key=lambda v: (bin(padj[v] & placed_mask).count('1'),
                                              pdeg[v]))
        order.append(bestv)
        remaining.discard(bestv)
    pos = {v: i for i, v in enumerate(order)}
    # candidates by degree
    cand0 = []
    for v in order:
        cand0.append([h for h in range(host_n) if hdeg[h] >= pdeg[v]])

    assign = [-1] * pn
    used = 0

    def rec(i):
        nonlocal used
        if i == pn:
            if forbid is not None and tuple(assign) in forbid:
                return False
            return True
        v = order[i]
        req = padj[v]
        allowed = full & ~used
        m = req
        while m:
            b = m & -m
            w = b.bit_length() - 1
            if assign[w] != -1:
                allowed &= host_adj[assign[w]]
            m ^= b
        for h in cand0[i]:
            if not allowed >> h & 1:
                continue
            assign[v] = h
            used |= 1 << h
            if rec(i + 1):
                return True
            used &= ~(1 << h)
            assign[v] = -1
        return False

    if rec(0):
        return tuple(assign)
    return None


def contains(host, pattern):
    """Witness mapping of pattern into host (both SmallGraphs), or None."""
    return find_subgraph(pattern, host.n, host.adj)


def iter_subgraphs(pattern, host_n, host_adj):
    """Yield every injective map sending pattern edges to host edges.

    Same search as find_subgraph, but exhaustive; used by the reasoner to
    enumerate all placements of a pattern or motif.
    """
    pn = pattern.n
    if pn > host_n:
        return
    padj = pattern.adj
    pdeg = [bin(a).count('1') for a in padj]
    hdeg = [bin(a).count('1') for a in host_adj]
    full = (1 << host_n) - 1
    order = []
    remaining = set(range(pn))
    while remaining:
        placed_mask = 0
        for v in order:
            placed_mask |= 1 << v
        bestv = max(remaining,
                    key=lambda v: (bin(padj[v] & placed_mask).count('1'),
                                   pdeg[v]))
        order.append(bestv)
        remaining.discard(bestv)
    cand0 = []
    for v in order:
        cand0.append([h for h in range(host_n) if hdeg[h] >= pdeg[v]])

    assign = [-1] * pn
    used = 0

    def rec(i):
        nonlocal used
        if i == pn:
            yield tuple(assign)
            return
        v = order[i]
        req = padj[v]
        allowed = full & ~used
        m = req
        while m:
            b = m & -m
            w = b.bit_length() - 1
            if assign[w] != -1:
                allowed &= host_adj[assign[w]]
            m ^= b
        for h in cand0[i]:
            if not allowed >> h & 1:
                continue
            assign[v] = h
            used |= 1 << h
            yield from rec(i + 1)
            used &= ~(1 << h)
            assign[v] = -1

    yield from rec(0)
