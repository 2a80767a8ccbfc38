"""Certified verification of exact coordinates.

Two tiers of exactness:

* The 27-point witness coordinates are rational combinations of square
  roots (sqrt 3, sqrt 11, sqrt 33, sqrt 35, sqrt 385, ...).  RadicalValue
  does exact arithmetic in that tower, so unit distances are decided with
  zero tolerance.
* The 91 added points and the two 9-vertex exceptional graphs are given
  only by the minimal polynomial of z = x + iy plus rounded decimals.
  AlgebraicPoint isolates the intended root with complex interval Newton
  (directed-rounding arbitrary precision via mpmath.iv) and distances are
  certified with asymmetric thresholds: unit when ||p-q|^2 - 1| < 1e-40,
  non-unit when > 1e-6, escalating precision 128 -> 1024 bits.  Ambiguity
  is a hard error, never a guess.
"""

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources

import numpy as np
from mpmath import iv, mp, mpf

from .embed import PointSet

UNIT_MARGIN = mpf('1e-40')
NONUNIT_MARGIN = mpf('1e-6')
PRECISION_LADDER = (128, 256, 512, 1024)


class AmbiguousDistance(Exception):
    """Neither threshold met at maximum precision."""


class IsolationError(Exception):
    """Interval Newton failed to contract: the box does not isolate a root."""


# ------------------------------------------------------------- radicals ---

def _squarefree(r):
    """(s, f) with r = s * f^2 and s squarefree."""
    s, f, d = 1, 1, 2
    while d * d <= r:
        while r % (d * d) == 0:
            r //= d * d
            f *= d
        if r % d == 0:
            r //= d
            s *= d
        d += 1
    return s * r, f


class RadicalValue:
    """Exact rational linear combination of square roots of integers.

    Stored as {squarefree radicand: Fraction coefficient}; radicand 1 is
    the rational part.  Square roots of distinct squarefree integers are
    linearly independent over the rationals, so the normal form decides
    equality.
    """

    __slots__ = ('terms',)

    def __init__(self, terms=None):
        self.terms = dict(terms or {})

    @classmethod
    def from_terms(cls, triples):
        """From [(num, den, radicand), ...] meaning sum num/den * sqrt(rad)."""
        v = cls()
        for num, den, rad in triples:
            s, f = _squarefree(rad)
            v._add_term(s, Fraction(num * f, den))
        return v

    @classmethod
    def rational(cls, q):
        v = cls()
        v._add_term(1, Fraction(q))
        return v

    def _add_term(self, rad, coef):
        c = self.terms.get(rad, Fraction(0)) + coef
        if c:
            self.terms[rad] = c
        else:
            self.terms.pop(rad, None)

    def __add__(self, other):
        if not isinstance(other, RadicalValue):
            other = RadicalValue.rational(other)
        v = RadicalValue(self.terms)
        for rad, c in other.terms.items():
            v._add_term(rad, c)
        return v

    __radd__ = __add__

    def __neg__(self):
        return RadicalValue({r: -c for r, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, RadicalValue)
                       else RadicalValue.rational(-Fraction(other)))

    def __mul__(self, other):
        if not isinstance(other, RadicalValue):
            other = RadicalValue.rational(other)
        v = RadicalValue()
        for r1, c1 in self.terms.items():
            for r2, c2 in other.terms.items():
                s, f = _squarefree(r1 * r2)
                v._add_term(s, c1 * c2 * f)
        return v

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, RadicalValue):
            other = RadicalValue.rational(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_rational(self):
        return set(self.terms) <= {1}

    def __float__(self):
        return float(sum(float(c) * np.sqrt(r) for r, c in self.terms.items()))

    def interval(self):
        """Enclosure under the current iv precision."""
        t = iv.mpf(0)
        for r, c in self.terms.items():
            t += (iv.mpf(c.numerator) / iv.mpf(c.denominator)) * iv.sqrt(iv.mpf(r))
        return t

    def __repr__(self):
        return 'RadicalValue(%r)' % (self.terms,)


# ----------------------------------------------- complex interval Newton ---

def _cmul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _cdiv(a, b):
    m = b[0] * b[0] + b[1] * b[1]
    if m.a <= 0:
        raise IsolationError('derivative interval contains zero')
    return ((a[0] * b[0] + a[1] * b[1]) / m, (a[1] * b[0] - a[0] * b[1]) / m)


def _cpoly(coeffs, z):
    """Evaluate sum coeffs[k] z^k (constant first) over a complex box."""
    acc = (iv.mpf(coeffs[-1]), iv.mpf(0))
    for c in reversed(coeffs[:-1]):
        acc = _cmul(acc, z)
        acc = (acc[0] + iv.mpf(c), acc[1])
    return acc


def _inside(inner, outer):
    return inner.a > outer.a and inner.b < outer.b


def _meet(a, b):
    lo = max(a.a, b.a)
    hi = min(a.b, b.b)
    if lo > hi:
        raise IsolationError('empty intersection during Newton refinement')
    return iv.mpf([lo, hi])


def _polish(coeffs, x0, y0, bits):
    """Plain (uncertified) Newton polish of the root near (x0, y0)."""
    deriv = [k * c for k, c in enumerate(coeffs)][1:]
    old = mp.prec
    mp.prec = bits + 48
    try:
        z = mp.mpc(x0, y0)
        for _ in range(200):
            f = mp.polyval(list(reversed(coeffs)), z)
            fp = mp.polyval(list(reversed(deriv)), z)
            if fp == 0:
                raise IsolationError('zero derivative while polishing')
            step = f / fp
            z -= step
            if abs(step) < mpf(2) ** (-(bits + 32)):
                return z
        raise IsolationError('root polish did not converge')
    finally:
        mp.prec = old


def _newton_refine(coeffs, x0, y0, halfwidth, bits):
    """Certified box around the root of the z-polynomial near (x0, y0).

    The reported decimals are first polished by plain Newton (and checked to
    stay within their rounding radius, so the intended root is certified, not
    just *a* root); a small box around the polished value is then verified by
    one contracting interval Newton step, which proves existence and
    uniqueness of a root inside, and shrunk by further steps.
    """
    z = _polish(coeffs, x0, y0, bits)
    if abs(z.real - x0) > halfwidth or abs(z.imag - y0) > halfwidth:
        raise IsolationError('polished root left the reported-decimals box')
    deriv = [k * c for k, c in enumerate(coeffs)][1:]
    old = iv.prec
    iv.prec = bits + 16
    try:
        eps = mpf(2) ** (-(bits - 8))
        zx = iv.mpf(z.real) + iv.mpf([-eps, eps])
        zy = iv.mpf(z.imag) + iv.mpf([-eps, eps])
        contracted = False
        for _ in range(64):
            mx = iv.mpf(zx.mid)
            my = iv.mpf(zy.mid)
            fm = _cpoly(coeffs, (mx, my))
            fp = _cpoly(deriv, (zx, zy))
            q = _cdiv(fm, fp)
            nx, ny = mx - q[0], my - q[1]
            if not contracted:
                if not (_inside(nx, zx) and _inside(ny, zy)):
                    raise IsolationError(
                        'Newton step does not contract the seed box')
                contracted = True
            nx, ny = _meet(nx, zx), _meet(ny, zy)
            if nx.delta == zx.delta and ny.delta == zy.delta:
                break
            zx, zy = nx, ny
        return zx, zy
    finally:
        iv.prec = old


# ---------------------------------------------------------------- points ---

@dataclass(frozen=True)
class AlgebraicPoint:
    """A plane point with certifiable coordinates.

    Either exact (x, y RadicalValue) or the root of an integer minimal
    polynomial of z = x + iy nearest the reported decimals, optionally
    translated by (sqrt 3, 0).
    """
    id: str
    x: object = None            # RadicalValue for exact points
    y: object = None
    minpoly: tuple = None       # int coefficients, constant first
    approx: tuple = None        # reported decimals (of the untranslated root)
    digits: int = 5
    shift_x_sqrt3: bool = False

    @property
    def exact(self):
        return self.minpoly is None

    def float_xy(self):
        if self.exact:
            return float(self.x), float(self.y)
        x, y = self.approx
        if self.shift_x_sqrt3:
            x += float(np.sqrt(3))
        return x, y

    def box(self, bits):
        """Certified (x interval, y interval) at the given precision."""
        return _point_box(self, bits)


@lru_cache(maxsize=None)
def _point_box(p, bits):
    old = iv.prec
    iv.prec = bits + 16
    try:
        if p.exact:
            return p.x.interval(), p.y.interval()
        coeffs = p.minpoly
        if len(coeffs) == 2:  # linear: exact rational root, z real
            root = Fraction(-coeffs[0], coeffs[1])
            zx = iv.mpf(root.numerator) / iv.mpf(root.denominator)
            zy = iv.mpf(0)
        else:
            half = mpf(10) ** (-p.digits) * mpf('0.6')
            zx, zy = _newton_refine(coeffs, p.approx[0], p.approx[1],
                                    half, bits)
        if p.shift_x_sqrt3:
            zx = zx + iv.sqrt(iv.mpf(3))
        return zx, zy
    finally:
        iv.prec = old


@dataclass(frozen=True)
class DistanceCertificate:
    pair: tuple
    verdict: str           # 'unit' | 'non-unit'
    margin: float          # certified bound on ||p-q|^2 - 1|
    precision_bits: int


def _sq_dist_exact(p, q):
    dx = p.x - q.x
    dy = p.y - q.y
    return dx * dx + dy * dy


def certify_distance(p, q, ladder=PRECISION_LADDER):
    """DistanceCertificate for |p - q|; symmetric and deterministic.

    unit: certified ||p-q|^2 - 1| < 1e-40; non-unit: certified > 1e-6.
    Exact points are decided exactly.  Raises AmbiguousDistance when the
    ladder is exhausted with neither threshold met.
    """
    if p.exact and q.exact:
        d2 = _sq_dist_exact(p, q)
        if d2 == RadicalValue.rational(1):
            return DistanceCertificate((p.id, q.id), 'unit', 0.0, 0)
        old = iv.prec
        iv.prec = 128
        try:
            dev = d2.interval() - iv.mpf(1)
            lo = (min(abs(float(dev.a)), abs(float(dev.b)))
                  if (dev.a > 0 or dev.b < 0) else 0.0)
        finally:
            iv.prec = old
        return DistanceCertificate((p.id, q.id), 'non-unit', lo, 128)
    for bits in ladder:
        old = iv.prec
        iv.prec = bits + 16
        try:
            px, py = p.box(bits)
            qx, qy = q.box(bits)
            dx, dy = px - qx, py - qy
            dev = dx * dx + dy * dy - iv.mpf(1)
            ea, eb = abs(float(dev.a)), abs(float(dev.b))
            hi = max(ea, eb)
            lo = min(ea, eb) if (dev.a > 0 or dev.b < 0) else 0.0
        finally:
            iv.prec = old
        if hi < float(UNIT_MARGIN):
            return DistanceCertificate((p.id, q.id), 'unit', hi, bits)
        if lo > float(NONUNIT_MARGIN):
            return DistanceCertificate((p.id, q.id), 'non-unit', lo, bits)
    raise AmbiguousDistance((p.id, q.id))


def build_pointset(points, name):
    """PointSet with every pair classified unit / non-unit.

    Raises AmbiguousDistance naming the first unclassifiable pair and
    ValueError if two points are not certified distinct.
    """
    approx = np.array([p.float_xy() for p in points])
    pairs = []
    for i in range(len(points)):
        for j in range(i + 1, len(points)):
            cert = certify_distance(points[i], points[j])
            if cert.verdict == 'unit':
                pairs.append((i, j))
    # distinctness: certified boxes at 128 bits must not overlap too closely
    old = iv.prec
    iv.prec = 160
    try:
        boxes = [p.box(128) for p in points]
        for i in range(len(points)):
            for j in range(i + 1, len(points)):
                dx = boxes[i][0] - boxes[j][0]
                dy = boxes[i][1] - boxes[j][1]
                d2 = dx * dx + dy * dy
                if d2.a < mpf('1e-12'):
                    raise ValueError('points %s and %s not certified distinct'
                                     % (points[i].id, points[j].id))
    finally:
        iv.prec = old
    return PointSet(name, list(points), approx, tuple(pairs))


# ------------------------------------------------------------ data files ---

def _data(name):
    return json.loads(
        resources.files('unitdist.data').joinpath(name).read_text())


@lru_cache(maxsize=None)
def core_points():
    """The 27 exact radical points of the core witness, figure order."""
    raw = _data('g27.json')
    pts = []
    for k, (xt, yt) in enumerate(raw['points']):
        pts.append(AlgebraicPoint(id='g27/%d' % k,
                                  x=RadicalValue.from_terms(xt),
                                  y=RadicalValue.from_terms(yt)))
    return pts


@lru_cache(maxsize=None)
def extension_points():
    """The 91 minimal-polynomial points added to reach 118."""
    raw = _data('g118.json')['extra']
    return [AlgebraicPoint(id='g118/%d' % (27 + k),
                           minpoly=tuple(r['minpoly']),
                           approx=(r['x'], r['y']))
            for k, r in enumerate(raw)]


def _h_points(name):
    raw = _data(name + '.json')
    pts = []
    for k, r in enumerate(raw['vertices']):
        if r['minpoly'] == [0, 1] and not r['shift_x_sqrt3'] \
                and r['x'] == 0 and r['y'] == 0:
            pts.append(AlgebraicPoint(id='%s/%d' % (name, k),
                                      x=RadicalValue(), y=RadicalValue()))
        else:
            pts.append(AlgebraicPoint(id='%s/%d' % (name, k),
                                      minpoly=tuple(r['minpoly']),
                                      approx=(r['x'], r['y']),
                                      shift_x_sqrt3=r['shift_x_sqrt3']))
    return pts, [tuple(e) for e in raw['edges']]


@lru_cache(maxsize=None)
def g27_pointset():
    return build_pointset(core_points(), 'G27')


@lru_cache(maxsize=None)
def g118_pointset():
    return build_pointset(core_points() + extension_points(), 'G118')


@lru_cache(maxsize=None)
def h_graphs():
    """The two exceptional 9-vertex graphs as (PointSet, edge list) pairs."""
    out = {}
    for name in ('h1', 'h2'):
        pts, edges = _h_points(name)
        out[name.upper()] = (build_pointset(pts, name.upper()), edges)
    return out


# --------------------------------------------------------------- reports ---

def verify_table1():
    """Exact check: every drawn edge of the 27-point witness has squared
    length exactly 1 in radical arithmetic."""
    raw = _data('g27.json')
    pts = core_points()
    one = RadicalValue.rational(1)
    edges = []
    failures = []
    for i, j in raw['drawn_edges']:
        d2 = _sq_dist_exact(pts[i], pts[j])
        ok = d2 == one
        edges.append({'edge': [i, j], 'exact_unit': ok})
        if not ok:
            failures.append((i, j))
    return {'table': 'table1', 'vertices': len(pts), 'edges': edges,
            'ok': not failures, 'failures': failures}


def _mid_mpf(x):
    """Full-precision midpoint of an interval (ivmpf.mid would round to the
    ambient iv.prec, discarding the refinement)."""
    a, b = x._mpi_
    return (mp.make_mpf(a) + mp.make_mpf(b)) / 2


def _residual_at_mid(p, bits=256):
    """|minpoly(midpoint of refined box)| — evidence the decimals are right."""
    zx, zy = p.box(bits)
    old = mp.prec
    mp.prec = bits + 16
    try:
        z = _mid_mpf(zx) + 1j * _mid_mpf(zy)
        if p.shift_x_sqrt3:
            z -= mp.sqrt(3)
        v = 0
        for c in reversed(p.minpoly):
            v = v * z + c
        return abs(v)
    finally:
        mp.prec = old


def verify_points(points, label):
    """Refine every minimal-polynomial point and report the residual at the
    box midpoint plus agreement with the reported decimals."""
    rows = []
    ok = True
    for p in points:
        if p.exact:
            rows.append({'id': p.id, 'kind': 'radical', 'ok': True})
            continue
        try:
            res = _residual_at_mid(p)
            good = res < mpf(10) ** (-2 * p.digits)
        except IsolationError as e:
            res, good = None, False
        rows.append({'id': p.id, 'kind': 'algebraic',
                     'minpoly_residual': float(res) if res is not None else None,
                     'ok': good})
        ok = ok and good
    return {'table': label, 'points': rows, 'ok': ok}


def verify_edges(pointset, edges, label):
    """Certify every declared edge unit; report margins."""
    rows = []
    ok = True
    for i, j in edges:
        try:
            c = certify_distance(pointset.points[i], pointset.points[j])
            good = c.verdict == 'unit'
            rows.append({'edge': [i, j], 'verdict': c.verdict,
                         'margin': c.margin, 'bits': c.precision_bits})
        except AmbiguousDistance:
            good = False
            rows.append({'edge': [i, j], 'verdict': 'ambiguous'})
        ok = ok and good
    return {'table': label, 'edges': rows, 'ok': ok}
