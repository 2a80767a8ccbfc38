"""Mechanized forbiddenness proofs.

Three ingredients, combined into replayable proof traces:

* Forced-edge closure: four totally-unfaithful patterns whose dashed pair is
  at distance 1 in every embedding; any placement of a pattern lets the
  dashed pair be added as a unit edge.
* Rigid motifs: small rigid subgraphs with an anchor pair at a forced exact
  distance (sqrt 3, 2, sqrt 7 or 3).  Forced distances transfer along
  parallelogram (unit 4-cycle) relations: a unit 4-cycle a-b-c-d is a
  rhombus, so p_b - p_a = p_c - p_d.
* Contradictions: an anchor-class pair at distance > 2 with a common
  neighbor; at distance exactly 2 with two common neighbors (the midpoint is
  unique); at distance exactly 3 with two internally disjoint 3-edge paths
  (the straight path is unique); or carrying a graph edge at distance != 1.
  A graph whose closure contains K4, K2,3, a contradiction, or a smaller
  proven-forbidden graph is forbidden.

Everything is sound but deliberately incomplete: a None result never claims
the graph is unit-distance.
"""

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources

import numpy as np

from .graphs import SmallGraph, find_subgraph, iter_subgraphs, canonical_form

SQRT3 = float(np.sqrt(3.0))
SQRT7 = float(np.sqrt(7.0))

DISTANCE_VALUE = {'sqrt3': SQRT3, '2': 2.0, 'sqrt7': SQRT7, '3': 3.0}
GREATER_THAN_2 = ('sqrt7', '3')


@dataclass(frozen=True)
class PatternRule:
    name: str
    pattern: SmallGraph
    forced_pair: tuple
    coords: tuple


@dataclass(frozen=True)
class RigidMotif:
    name: str
    motif: SmallGraph
    anchor_pair: tuple
    forced_distance: str     # symbolic tag: 'sqrt3' | '2' | 'sqrt7' | '3'
    coords: tuple


@lru_cache(maxsize=None)
def pattern_rules():
    raw = json.loads(
        resources.files('unitdist.data').joinpath('patterns.json').read_text())
    rules = []
    for r in raw:
        g = SmallGraph.from_edges(r['n'], [tuple(e) for e in r['edges']])
        for pair in r['forced_pairs']:
            assert not g.has_edge(*pair)
            rules.append(PatternRule(r['name'], g, tuple(pair),
                                     tuple(map(tuple, r['coords']))))
    return tuple(rules)


def _motif(name, n, edges, anchor, dist, coords):
    return RigidMotif(name, SmallGraph.from_edges(n, edges), anchor, dist,
                      tuple(coords))


@lru_cache(maxsize=None)
def rigid_motifs():
    """The fixed motif library.

    diamond: two triangles on a shared edge; apexes at sqrt 3.
    strip3: three triangles in a strip; far corners at 2.
    hexpatch: seven-vertex hexagonal patch; (0, sqrt 3) vs (2, 0), sqrt 7.
    collinear4: five-triangle strip forcing four collinear vertices; ends
    at 3.  Each is rigid because every added vertex is one of two unit-circle
    intersections and the other choice coincides with an existing vertex.
    """
    s = SQRT3 / 2
    return (
        _motif('diamond', 4,
               [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)],
               (2, 3), 'sqrt3',
               [(0, 0), (1, 0), (0.5, s), (0.5, -s)]),
        _motif('strip3', 5,
               [(0, 1), (0, 2), (1, 2), (0, 3), (2, 3), (1, 4), (2, 4)],
               (3, 4), '2',
               [(0, 0), (1, 0), (0.5, s), (-0.5, s), (1.5, s)]),
        _motif('hexpatch', 7,
               [(0, 1), (0, 2), (0, 4), (1, 2), (1, 3), (1, 6),
                (2, 3), (2, 4), (2, 5), (3, 6), (4, 5)],
               (5, 6), 'sqrt7',
               [(0, 0), (1, 0), (0.5, s), (1.5, s), (-0.5, s),
                (0, 2 * s), (2, 0)]),
        _motif('collinear4', 7,
               [(0, 1), (0, 3), (1, 2), (1, 3), (1, 4), (2, 4),
                (2, 5), (2, 6), (3, 4), (4, 5), (5, 6)],
               (0, 6), '3',
               [(0, 0), (1, 0), (2, 0), (0.5, s), (1.5, s), (2.5, s),
                (3, 0)]),
    )


# ------------------------------------------------------------- closure ---

def forced_edges(g):
    """All (non-edge pair, rule, witness) placements of the patterns in g."""
    out = []
    seen = set()
    for rule in pattern_rules():
        for w in iter_subgraphs(rule.pattern, g.n, g.adj):
            a, b = w[rule.forced_pair[0]], w[rule.forced_pair[1]]
            pair = (min(a, b), max(a, b))
            if g.has_edge(*pair) or pair in seen:
                continue
            seen.add(pair)
            out.append((pair, rule, w))
    return out


def closure(g):
    """Fixed point of adding every forced edge; returns (graph, steps)."""
    steps = []
    h = g
    while True:
        fe = forced_edges(h)
        if not fe:
            return h, steps
        for pair, rule, w in fe:
            if not h.has_edge(*pair):
                h = h.add_edge(*pair)
                steps.append({'rule': 'forced-edge', 'pattern': rule.name,
                              'forced_pair': list(rule.forced_pair),
                              'witness': list(w), 'edge': list(pair)})


# ------------------------------------- forced distances and contradictions ---

def _four_cycles(g):
    """Every 4-cycle a-b-c-d, once, with a the minimum vertex and b < d."""
    cycles = []
    for a in range(g.n):
        for b in range(a + 1, g.n):
            if not g.has_edge(a, b):
                continue
            for d in range(b + 1, g.n):
                if not g.has_edge(a, d):
                    continue
                for c in range(a + 1, g.n):
                    if c in (b, d):
                        continue
                    if g.has_edge(b, c) and g.has_edge(c, d):
                        cycles.append((a, b, c, d))
    return cycles


class _DiffClasses:
    """Forced equalities between vertex-difference vectors.

    Every unit 4-cycle a-b-c-d is a rhombus, so p_b - p_a = p_c - p_d.
    Each such relation is the integer vector e_b - e_a - e_c + e_d = 0 on
    the formal vertex positions; diff(u,v) = diff(x,y) is forced exactly
    when e_v - e_u - e_y + e_x lies in the rational span of the relations.
    Exact integer Gaussian elimination keeps this sound.
    """

    def __init__(self, g):
        self.n = g.n
        rows = []
        for a, b, c, d in _four_cycles(g):
            v = [Fraction(0)] * g.n
            v[b] += 1
            v[a] -= 1
            v[c] -= 1
            v[d] += 1
            rows.append(v)
        self.basis = []   # rows in echelon form, each with pivot column
        for v in rows:
            self._absorb(v)

    def _reduce(self, v):
        v = list(v)
        for pivot, row in self.basis:
            if v[pivot]:
                f = v[pivot]
                for k in range(pivot, self.n):
                    v[k] -= f * row[k]
        return v

    def _absorb(self, v):
        v = self._reduce(v)
        for k in range(self.n):
            if v[k]:
                inv = Fraction(1) / v[k]
                v = [x * inv for x in v]
                self.basis.append((k, v))
                self.basis.sort()
                return

    def same(self, p, q):
        """Whether diff p = diff q is forced (p, q are ordered pairs)."""
        v = [Fraction(0)] * self.n
        v[p[1]] += 1
        v[p[0]] -= 1
        v[q[1]] -= 1
        v[q[0]] += 1
        return not any(self._reduce(v))

    def class_of(self, p):
        return [q for q in ((u, v) for u in range(self.n)
                            for v in range(self.n) if u != v)
                if self.same(p, q)]


def _common_neighbors(g, a, b):
    m = g.adj[a] & g.adj[b]
    out = []
    while m:
        lo = m & -m
        out.append(lo.bit_length() - 1)
        m ^= lo
    return out


def _three_paths(g, a, b):
    """Internally vertex-disjoint unit 3-edge paths from a to b (greedy)."""
    paths = []
    used = set()
    for x in range(g.n):
        if x in (a, b) or x in used or not g.has_edge(a, x):
            continue
        for y in range(g.n):
            if y in (a, b, x) or y in used:
                continue
            if g.has_edge(x, y) and g.has_edge(y, b):
                paths.append((a, x, y, b))
                used.update((x, y))
                break
        else:
            continue
    return paths


def forced_distance_pairs(g):
    """All (pair, distance tag, evidence) derivable from motifs in g.

    Motif anchors give the base facts; the rhombus relation spreads each
    fact to every pair with the same forced difference vector.
    """
    diffs = _DiffClasses(g)
    facts = {}
    for motif in rigid_motifs():
        for w in iter_subgraphs(motif.motif, g.n, g.adj):
            a = w[motif.anchor_pair[0]]
            b = w[motif.anchor_pair[1]]
            for p, q in {(a, b), (b, a)}:
                for u, v in diffs.class_of((p, q)):
                    pair = (min(u, v), max(u, v))
                    if pair in facts:
                        continue
                    facts[pair] = {
                        'motif': motif.name,
                        'distance': motif.forced_distance,
                        'witness': list(w),
                        'anchor': [a, b],
                        'pair': list(pair)}
    return facts


def _contradiction(g, facts):
    """First contradiction among forced-distance facts, as a trace step."""
    for pair, ev in sorted(facts.items()):
        a, b = pair
        tag = ev['distance']
        step = dict(ev)
        if g.has_edge(a, b) and tag != '1':
            step['rule'] = 'forced-nonunit-edge'
            return step, 'forced-nonunit-edge'
        common = _common_neighbors(g, a, b)
        if tag in GREATER_THAN_2 and common:
            step['rule'] = 'distance>2-with-common-neighbor'
            step['common'] = common[:1]
            return step, 'distance>2-with-common-neighbor'
        if tag == '2' and len(common) >= 2:
            step['rule'] = 'distance-2-with-two-common-neighbors'
            step['common'] = common[:2]
            return step, 'distance-2-with-two-common-neighbors'
        if tag == '3':
            paths = _three_paths(g, a, b)
            if len(paths) >= 2:
                step['rule'] = 'distance-3-without-unique-path'
                step['paths'] = [list(p) for p in paths[:2]]
                return step, 'distance-3-without-unique-path'
    return None


def _k4_witness(g):
    from .catalog import _k4_witness as w
    return w(g)


def _k23_witness(g):
    from .catalog import _k23_witness as w
    return w(g)


# ----------------------------------------------------------- proof traces ---

@dataclass
class ProofTrace:
    steps: list
    verdict: str

    def to_json(self):
        return json.dumps({'steps': self.steps, 'verdict': self.verdict})

    @classmethod
    def from_json(cls, s):
        d = json.loads(s)
        return cls(d['steps'], d['verdict'])

    def replay(self, g):
        """Re-execute the trace on g, verifying every step; returns the
        verdict, or raises ValueError on any invalid step."""
        return _replay(g, self.steps, self.verdict)


def _check_witness(g, pattern, w):
    if len(set(w)) != pattern.n or any(not 0 <= h < g.n for h in w):
        raise ValueError('witness is not an injection into the graph')
    for u, v in pattern.edges():
        if not g.has_edge(w[u], w[v]):
            raise ValueError('witness does not map an edge to an edge')


def _replay(g, steps, verdict):
    h = g
    rules = {(r.name, r.forced_pair): r for r in pattern_rules()}
    motifs = {m.name: m for m in rigid_motifs()}
    for step in steps:
        kind = step['rule']
        if kind == 'forced-edge':
            rule = rules[(step['pattern'], tuple(step['forced_pair']))]
            w = step['witness']
            _check_witness(h, rule.pattern, w)
            a, b = step['edge']
            pa = w[rule.forced_pair[0]]
            pb = w[rule.forced_pair[1]]
            if {a, b} != {pa, pb}:
                raise ValueError('added edge is not the forced pair')
            h = h.add_edge(a, b)
        elif kind == 'contains-K4':
            a, b, c, d = step['witness']
            for u, v in ((a, b), (a, c), (a, d), (b, c), (b, d), (c, d)):
                if u == v or not h.has_edge(u, v):
                    raise ValueError('K4 witness invalid')
            if verdict != 'contains-K4':
                raise ValueError('verdict mismatch')
            return verdict
        elif kind == 'contains-K2,3':
            a, b, x, y, z = step['witness']
            if len({a, b, x, y, z}) != 5:
                raise ValueError('K2,3 witness not injective')
            for u in (a, b):
                for v in (x, y, z):
                    if not h.has_edge(u, v):
                        raise ValueError('K2,3 witness invalid')
            if verdict != 'contains-K2,3':
                raise ValueError('verdict mismatch')
            return verdict
        elif kind in ('forced-nonunit-edge', 'distance>2-with-common-neighbor',
                      'distance-2-with-two-common-neighbors',
                      'distance-3-without-unique-path'):
            motif = motifs[step['motif']]
            w = step['witness']
            _check_witness(h, motif.motif, w)
            a, b = step['anchor']
            if {w[motif.anchor_pair[0]], w[motif.anchor_pair[1]]} != {a, b}:
                raise ValueError('anchor does not match the motif witness')
            u, v = step['pair']
            diffs = _DiffClasses(h)
            if not (diffs.same((a, b), (u, v)) or diffs.same((a, b), (v, u))
                    or {a, b} == {u, v}):
                raise ValueError('pair not reachable by rhombus transfer')
            tag = step['distance']
            if tag != motif.forced_distance:
                raise ValueError('distance tag mismatch')
            if kind == 'forced-nonunit-edge':
                if tag == '1' or not h.has_edge(u, v):
                    raise ValueError('no forced non-unit edge')
            elif kind == 'distance>2-with-common-neighbor':
                if tag not in GREATER_THAN_2 or not any(
                        h.has_edge(c, u) and h.has_edge(c, v)
                        for c in step['common']):
                    raise ValueError('no common neighbor at distance > 2')
            elif kind == 'distance-2-with-two-common-neighbors':
                cs = set(step['common'])
                if tag != '2' or len(cs) < 2 or not all(
                        h.has_edge(c, u) and h.has_edge(c, v) for c in cs):
                    raise ValueError('missing two common neighbors')
            else:
                p1, p2 = [tuple(p) for p in step['paths']]
                if tag != '3':
                    raise ValueError('paths rule needs distance 3')
                for p in (p1, p2):
                    if p[0] != u or p[3] != v or len(set(p)) != 4:
                        raise ValueError('invalid 3-path endpoints')
                    for x, y in zip(p, p[1:]):
                        if not h.has_edge(x, y):
                            raise ValueError('3-path edge missing')
                if set(p1[1:3]) & set(p2[1:3]):
                    raise ValueError('3-paths are not internally disjoint')
            if verdict != kind:
                raise ValueError('verdict mismatch')
            return verdict
        elif kind == 'placement-contradiction':
            a, b, c = step['seed']
            for u, v in ((a, b), (b, c), (a, c)):
                if not h.has_edge(u, v):
                    raise ValueError('seed is not a triangle')
            try:
                dead = _explore_placements(h, (a, b, c))
            except _Inconclusive:
                raise ValueError('placement replay inconclusive')
            if not dead:
                raise ValueError('placement replay found an embedding')
            if verdict != 'placement-contradiction':
                raise ValueError('verdict mismatch')
            return verdict
        elif kind == 'contains-forbidden':
            from .catalog import entry
            e = entry(step['entry'])
            w = step['witness']
            _check_witness(h, e.graph, w)
            sub = ProofTrace(step['subproof']['steps'],
                             step['subproof']['verdict'])
            sub.replay(e.graph)
            if verdict != 'contains-forbidden':
                raise ValueError('verdict mismatch')
            return verdict
        else:
            raise ValueError('unknown rule %r' % kind)
    raise ValueError('trace has no terminal step')


# -------------------------------------------------------- prove_forbidden ---

_proof_cache = {}


def prove_forbidden(g):
    """A replayable ProofTrace that g is forbidden, or None.

    Sound but incomplete: None never means unit-distance.  Recursion: the
    closure may contain a smaller catalog member whose own proof certifies
    forbiddenness of g.
    """
    key = canonical_form(g)[0]
    if key in _proof_cache:
        return _proof_cache[key]
    _proof_cache[key] = trace = _prove(g)
    return trace


def _prove(g):
    h, steps = closure(g)
    w = _k4_witness(h)
    if w:
        return ProofTrace(steps + [{'rule': 'contains-K4',
                                    'witness': list(w)}], 'contains-K4')
    w = _k23_witness(h)
    if w:
        return ProofTrace(steps + [{'rule': 'contains-K2,3',
                                    'witness': list(w)}], 'contains-K2,3')
    facts = forced_distance_pairs(h)
    hit = _contradiction(h, facts)
    if hit:
        step, verdict = hit
        return ProofTrace(steps + [step], verdict)
    # the closure may contain a smaller catalog member that this machinery
    # proves forbidden on its own
    from .catalog import load_catalog
    for e in load_catalog():
        if e.n >= g.n or e.id in ('F(4,6,1)', 'F(5,6,1)'):
            continue
        if e.m > h.num_edges():
            continue
        w = find_subgraph(e.graph, h.n, h.adj)
        if w is None:
            continue
        sub = prove_forbidden(e.graph)
        if sub is not None:
            return ProofTrace(
                steps + [{'rule': 'contains-forbidden', 'entry': e.id,
                          'witness': list(w),
                          'subproof': {'steps': sub.steps,
                                       'verdict': sub.verdict}}],
                'contains-forbidden')
    seed = placement_contradiction(h)
    if seed is not None:
        return ProofTrace(
            steps + [{'rule': 'placement-contradiction', 'seed': list(seed)}],
            'placement-contradiction')
    return None


# ---------------------------------------------------- numeric validation ---

def validate_pattern(rule, trials=100, seed=0):
    """Check numerically that the forced pair sits at distance 1 in random
    embeddings of the pattern; returns the max deviation observed."""
    return _validate(rule.pattern, rule.forced_pair, 1.0, trials, seed)


def validate_motif(motif, trials=100, seed=0):
    """Max deviation of the anchor distance from its forced value over
    random numeric embeddings of the motif."""
    return _validate(motif.motif, motif.anchor_pair,
                     DISTANCE_VALUE[motif.forced_distance], trials, seed)


def _validate(g, pair, target, trials, seed):
    from .embed import solve_numeric
    worst = 0.0
    found = 0
    s = seed
    while found < trials:
        e = solve_numeric(g, seed=s, budget=5)
        s += 1
        if e is None:
            continue
        found += 1
        d = float(np.hypot(*(e.coords[pair[0]] - e.coords[pair[1]])))
        worst = max(worst, abs(d - target))
        if s - seed > 20 * trials:
            raise RuntimeError('embedding success rate too low to validate')
    return worst


# ------------------------------------------------- exact placement engine ---

_PLACEMENT_BRANCH_CAP = 400
_PLACEMENT_EXPR_CAP = 4000


class _Inconclusive(Exception):
    """The placement search cannot decide within its budget."""


def _triangles(g):
    out = []
    for a in range(g.n):
        for b in range(a + 1, g.n):
            if not g.has_edge(a, b):
                continue
            m = g.adj[a] & g.adj[b] >> (b + 1) << (b + 1)
            while m:
                lo = m & -m
                out.append((a, b, lo.bit_length() - 1))
                m ^= lo
    return out


def _exact_candidates(pa, pb):
    """Unit-circle intersections around exact points pa, pb.

    Returns a list of 0, 1 or 2 exact points; raises _Inconclusive when the
    sign of |pa-pb|^2 - 4 cannot be decided.
    """
    import sympy as sp
    ax, ay = pa
    bx, by = pb
    d2 = sp.expand((ax - bx) ** 2 + (ay - by) ** 2)
    diff = sp.radsimp(sp.expand(d2 - 4))
    mx, my = (ax + bx) / 2, (ay + by) / 2
    if diff.equals(0):
        return [(sp.simplify(mx), sp.simplify(my))]
    if diff.is_positive:
        return []
    if not diff.is_negative:
        raise _Inconclusive
    # half-height of the lens: sqrt(1 - d2/4); offset along the perpendicular
    h2 = sp.radsimp(sp.expand(1 - d2 / 4))
    h_over_d = sp.sqrt(sp.radsimp(h2 / d2))
    ox = sp.simplify(-(by - ay) * h_over_d)
    oy = sp.simplify((bx - ax) * h_over_d)
    return [(sp.simplify(mx + ox), sp.simplify(my + oy)),
            (sp.simplify(mx - ox), sp.simplify(my - oy))]


def _same_point(p, q):
    r1 = p[0].equals(q[0])
    r2 = p[1].equals(q[1]) if r1 else False
    if r1 is None or r2 is None:
        raise _Inconclusive
    return bool(r1) and bool(r2)


def _unit_from(p, q):
    import sympy as sp
    d2 = sp.expand((p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2)
    r = sp.radsimp(sp.expand(d2 - 1)).equals(0)
    if r is None:
        raise _Inconclusive
    return bool(r)


def _cluster_shapes(verts, edge_pairs):
    """All exact shapes of a rigid vertex cluster, seed triangle fixed.

    Same greedy placement as _explore_placements but collecting every fully
    placed branch instead of looking for contradictions.  Raises
    _Inconclusive if the cluster has no triangle or stalls (not rigid under
    the greedy order).
    """
    import sympy as sp
    adj = {v: set() for v in verts}
    for u, w in edge_pairs:
        adj[u].add(w)
        adj[w].add(u)
    seed = None
    for a in verts:
        for b in adj[a]:
            common = adj[a] & adj[b]
            if common:
                seed = (a, b, min(common))
                break
        if seed:
            break
    if seed is None:
        raise _Inconclusive
    a, b, c = seed
    half = sp.Rational(1, 2)
    start = {a: (sp.Integer(0), sp.Integer(0)),
             b: (sp.Integer(1), sp.Integer(0)),
             c: (half, sp.sqrt(3) / 2)}
    stack, shapes, visited = [start], [], 0
    while stack:
        visited += 1
        if visited > _PLACEMENT_BRANCH_CAP:
            raise _Inconclusive
        placed = stack.pop()
        best, bestcnt = None, 1
        for v in verts:
            if v in placed:
                continue
            cnt = len(adj[v] & placed.keys())
            if cnt > bestcnt:
                best, bestcnt = v, cnt
        if best is None:
            if len(placed) == len(verts):
                shapes.append(placed)
                continue
            raise _Inconclusive
        v = best
        nbrs = sorted(adj[v] & placed.keys())
        for p in _exact_candidates(placed[nbrs[0]], placed[nbrs[1]]):
            if not all(_unit_from(p, placed[w]) for w in nbrs[2:]):
                continue
            if any(_same_point(p, q) for q in placed.values()):
                continue
            child = dict(placed)
            child[v] = p
            stack.append(child)
    return shapes


def _merge_stalled(g, placed):
    """Decide a stalled branch by joining the unplaced cluster rigidly.

    The unplaced vertices must form a single rigid cluster tied to the
    placed part by at least four unit edges: four constraints pin the four
    degrees of freedom of the relative isometry (rotation, translation,
    with reflection handled as a second transform family).  Every exact
    solution is checked for injectivity; a real injective solution means
    the branch embeds (returns False), while exhausting all solutions
    proves the branch dead (returns True).
    """
    import sympy as sp
    rest = [v for v in range(g.n) if v not in placed]
    cross = [(u, v) for v in rest for u in placed if g.has_edge(u, v)]
    if len(cross) < 4:
        raise _Inconclusive
    intra = [(u, v) for i, u in enumerate(rest) for v in rest[i + 1:]
             if g.has_edge(u, v)]
    # single connected cluster only
    comp = {rest[0]}
    grow = True
    while grow:
        grow = False
        for u, v in intra:
            if (u in comp) != (v in comp):
                comp.add(u)
                comp.add(v)
                grow = True
    if comp != set(rest):
        raise _Inconclusive
    c, s, tx, ty = sp.symbols('_c _s _tx _ty', real=True)
    for shape in _cluster_shapes(rest, intra):
        for refl in (False, True):
            if refl:
                tf = lambda q: (c * q[0] + s * q[1] + tx,
                                s * q[0] - c * q[1] + ty)
            else:
                tf = lambda q: (c * q[0] - s * q[1] + tx,
                                s * q[0] + c * q[1] + ty)
            eqs = [sp.expand(c**2 + s**2 - 1)]
            for u, v in cross:
                px, py = placed[u]
                qx, qy = tf(shape[v])
                eqs.append(sp.expand((qx - px)**2 + (qy - py)**2 - 1))
            sols = sp.solve(eqs, [c, s, tx, ty], dict=True)
            for sol in sols:
                if any(v.free_symbols for v in sol.values()):
                    raise _Inconclusive   # underdetermined: no verdict
                vals = [sp.simplify(v) for v in sol.values()]
                reality = [v.is_real for v in vals]
                if any(r is None for r in reality):
                    raise _Inconclusive
                if not all(reality):
                    continue              # complex solution: no embedding
                pts = {v: tuple(sp.simplify(x.subs(sol))
                                for x in tf(shape[v])) for v in rest}
                if any(_same_point(p, q) for p in pts.values()
                       for q in placed.values()):
                    continue              # solution collapses two vertices
                return False              # real injective completion exists
    return True


def _explore_placements(g, seed):
    """True if every exact completion of g from the seed triangle dies.

    The seed is placed as a fixed equilateral triangle (WLOG up to isometry
    and reflection); every further vertex with two placed neighbors must go
    on one of at most two circle intersections, pruned by all its placed
    neighbors and by injectivity.  A branch that stalls with every unplaced
    vertex below two placed neighbors is decided by _merge_stalled.  Branch
    exhaustion proves forbiddenness; a fully placed branch or an
    undecidable comparison aborts the search.
    """
    import sympy as sp
    a, b, c = seed
    half = sp.Rational(1, 2)
    s3 = sp.sqrt(3) / 2
    start = {a: (sp.Integer(0), sp.Integer(0)),
             b: (sp.Integer(1), sp.Integer(0)),
             c: (half, s3)}
    stack = [start]
    visited = 0
    while stack:
        visited += 1
        if visited > _PLACEMENT_BRANCH_CAP:
            raise _Inconclusive
        placed = stack.pop()
        best, bestcnt = None, 1
        for v in range(g.n):
            if v in placed:
                continue
            cnt = sum(1 for w in placed if g.has_edge(v, w))
            if cnt > bestcnt:
                best, bestcnt = v, cnt
        if best is None:
            if len(placed) == g.n:
                return False      # a consistent exact embedding exists
            if _merge_stalled(g, placed):
                continue          # stalled branch dies
            return False          # stalled branch completes to an embedding
        v = best
        nbrs = sorted(w for w in placed if g.has_edge(v, w))
        cands = _exact_candidates(placed[nbrs[0]], placed[nbrs[1]])
        for p in cands:
            if sum(len(sp.srepr(x)) for x in p) > _PLACEMENT_EXPR_CAP:
                raise _Inconclusive
            if not all(_unit_from(p, placed[w]) for w in nbrs[2:]):
                continue
            if any(_same_point(p, q) for q in placed.values()):
                continue
            child = dict(placed)
            child[v] = p
            stack.append(child)
    return True


def placement_contradiction(g):
    """Seed triangle from which every exact placement of g dies, or None."""
    tried = set()
    for seed in _triangles(g):
        try:
            if _explore_placements(g, seed):
                return seed
            return None           # g admits an exact embedding: give up
        except _Inconclusive:
            tried.add(seed)
            continue
    return None
