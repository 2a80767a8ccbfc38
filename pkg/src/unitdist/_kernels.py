"""JIT-compiled kernels for the enumeration sweep.

These mirror the reference implementations in graphs.py exactly (same
refinement key encoding, cell choice, twin pruning, and code convention)
but run orders of magnitude faster.  Kernels assume n <= 12 so refinement
keys fit in an int64; the enumeration sweep only needs n <= 9.
"""

import numpy as np
from numba import njit, int64, types
from numba.typed import Dict

# filter modes for expand_level
ALL, CONNECTED, BICONNECTED = 0, 1, 2


@njit(cache=True)
def _refine(n, adj, colors):
    keys = np.zeros(n, dtype=np.int64)
    order = np.zeros(n, dtype=np.int64)
    while True:
        for v in range(n):
            k = int64(colors[v] + 1) << (5 * (n + 1))
            m = adj[v]
            while m:
                b = m & -m
                w = 0
                bb = b
                while bb > 1:
                    bb >>= 1
                    w += 1
                k += int64(1) << (5 * (colors[w] + 1))
                m ^= b
            keys[v] = k
        # rank distinct keys ascending
        for v in range(n):
            order[v] = keys[v]
        order.sort()
        nd = 0
        prev = int64(-1)
        for i in range(n):
            if order[i] != prev:
                order[nd] = order[i]
                prev = order[i]
                nd += 1
        changed = False
        for v in range(n):
            lo, hi = 0, nd
            while lo < hi:
                mid = (lo + hi) // 2
                if order[mid] < keys[v]:
                    lo = mid + 1
                else:
                    hi = mid
            if colors[v] != lo:
                changed = True
            colors[v] = lo
        if not changed:
            return colors


@njit(cache=True)
def _code_of(n, adj, pos):
    # pos[p] = vertex placed at position p
    code = int64(0)
    for a in range(n):
        ra = adj[pos[a]]
        for b in range(a + 1, n):
            code = (code << 1) | ((ra >> pos[b]) & 1)
    return code


@njit(cache=True)
def canon_code(n, adj):
    """Canonical packed upper-triangle code; mirrors graphs.canonical_form."""
    colors0 = np.zeros(n, dtype=np.int64)
    for v in range(n):
        d = 0
        m = adj[v]
        while m:
            m &= m - 1
            d += 1
        colors0[v] = d
    _refine(n, adj, colors0)

    best = int64(-1)
    # explicit DFS stack: at each depth store candidate list and colors
    max_depth = n + 1
    order = np.zeros(n, dtype=np.int64)
    colstack = np.zeros((max_depth, n), dtype=np.int64)
    candstack = np.zeros((max_depth, n), dtype=np.int64)
    candlen = np.zeros(max_depth, dtype=np.int64)
    candidx = np.zeros(max_depth, dtype=np.int64)
    placedmask = np.zeros(max_depth, dtype=np.int64)

    for v in range(n):
        colstack[0, v] = colors0[v]
    depth = 0
    placedmask[0] = 0
    candlen[0] = -1  # flag: need to compute candidates

    while depth >= 0:
        if candlen[depth] == -1:
            placed = depth
            if placed == n:
                c = _code_of(n, adj, order)
                if c > best:
                    best = c
                depth -= 1
                continue
            pm = placedmask[depth]
            cmin = int64(1) << 62
            nc = 0
            for v in range(n):
                if (pm >> v) & 1:
                    continue
                cv = colstack[depth, v]
                if cv < cmin:
                    cmin = cv
                    candstack[depth, 0] = v
                    nc = 1
                elif cv == cmin:
                    candstack[depth, nc] = v
                    nc += 1
            # twin pruning among the candidate cell
            if nc > 1:
                keep = 0
                for i in range(nc):
                    v = candstack[depth, i]
                    skip = False
                    for j in range(keep):
                        u = candstack[depth, j]
                        au = adj[u] & ~(int64(1) << v)
                        av = adj[v] & ~(int64(1) << u)
                        if au == av:
                            skip = True
                            break
                    if not skip:
                        candstack[depth, keep] = v
                        keep += 1
                nc = keep
            candlen[depth] = nc
            candidx[depth] = 0
        if candidx[depth] >= candlen[depth]:
            candlen[depth] = -1
            depth -= 1
            continue
        v = candstack[depth, candidx[depth]]
        candidx[depth] += 1
        order[depth] = v
        nd = depth + 1
        placedmask[nd] = placedmask[depth] | (int64(1) << v)
        for w in range(n):
            colstack[nd, w] = colstack[depth, w]
        colstack[nd, v] = -1
        _refine(n, adj, colstack[nd])
        candlen[nd] = -1
        depth = nd

    return best


@njit(cache=True)
def is_connected_masks(n, adj):
    if n == 0:
        return True
    seen = int64(1)
    frontier = int64(1)
    while frontier:
        nxt = int64(0)
        m = frontier
        while m:
            b = m & -m
            w = 0
            bb = b
            while bb > 1:
                bb >>= 1
                w += 1
            nxt |= adj[w]
            m ^= b
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (int64(1) << n) - 1


@njit(cache=True)
def is_biconnected_masks(n, adj):
    if n <= 2:
        return is_connected_masks(n, adj)
    if not is_connected_masks(n, adj):
        return False
    disc = np.full(n, -1, dtype=np.int64)
    low = np.zeros(n, dtype=np.int64)
    parent = np.full(n, -1, dtype=np.int64)
    rest = np.zeros(n, dtype=np.int64)
    stack = np.zeros(n, dtype=np.int64)
    disc[0] = 0
    low[0] = 0
    timer = 1
    stack[0] = 0
    rest[0] = adj[0]
    top = 0
    root_children = 0
    while top >= 0:
        v = stack[top]
        if rest[v] != 0:
            b = rest[v] & -rest[v]
            rest[v] ^= b
            w = 0
            bb = b
            while bb > 1:
                bb >>= 1
                w += 1
            if disc[w] == -1:
                parent[w] = v
                if v == 0:
                    root_children += 1
                    if root_children > 1:
                        return False
                disc[w] = timer
                low[w] = timer
                timer += 1
                top += 1
                stack[top] = w
                rest[w] = adj[w]
            elif w != parent[v]:
                if disc[w] < low[v]:
                    low[v] = disc[w]
        else:
            top -= 1
            p = parent[v]
            if p != -1:
                if low[v] < low[p]:
                    low[p] = low[v]
                if p != 0 and low[v] >= disc[p]:
                    return False
    return True


@njit(cache=True)
def expand_level(parents, k, mode, final):
    """All canonical codes of (k+1)-vertex children of k-vertex parents.

    parents: (num, k) int64 adjacency masks, one row per parent graph.
    mode: ALL / CONNECTED / BICONNECTED connectivity filter for children;
    BICONNECTED only makes sense when final (last level of the sweep) since
    intermediate levels must keep every connected graph.  Returns a sorted
    int64 array of distinct canonical codes.
    """
    seen = Dict.empty(types.int64, types.uint8)
    child = np.zeros(k + 1, dtype=np.int64)
    smin = 0 if mode == ALL else 1
    for pi in range(parents.shape[0]):
        for s in range(smin, 1 << k):
            for v in range(k):
                if (s >> v) & 1:
                    child[v] = parents[pi, v] | (int64(1) << k)
                else:
                    child[v] = parents[pi, v]
            child[k] = s
            if final and mode == BICONNECTED:
                if not is_biconnected_masks(k + 1, child):
                    continue
            c = canon_code(k + 1, child)
            seen[c] = types.uint8(1)
    out = np.empty(len(seen), dtype=np.int64)
    i = 0
    for c in seen:
        out[i] = c
        i += 1
    out.sort()
    return out


@njit(cache=True)
def codes_to_adj(codes, n):
    """Decode packed upper-triangle codes back into adjacency mask rows."""
    out = np.zeros((codes.shape[0], n), dtype=np.int64)
    nb = n * (n - 1) // 2
    for i in range(codes.shape[0]):
        c = codes[i]
        k = nb - 1
        for a in range(n):
            for b in range(a + 1, n):
                if (c >> k) & 1:
                    out[i, a] |= int64(1) << b
                    out[i, b] |= int64(1) << a
                k -= 1
    return out
