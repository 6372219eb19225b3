"""Convex bodies queried through exact membership and line chords.

Every body answers two kinds of queries:

* ``contains(x, y)``: exact membership of a (lattice or rational) point;
* ``chord_exact(ox, oy, dx, dy)``: the closed parameter interval
  ``{t : (ox, oy) + t*(dx, dy) in C}`` for an integer origin and an integer
  direction, with endpoints given exactly as :class:`~dhull.exact.Surd`.

Discrete ray shooting only ever needs ``ceil(t_lo)`` and ``floor(t_hi)``,
which :meth:`ConvexBody.lattice_range` returns as plain integers.  Disks
override it with a pure-integer fast path.
"""

import abc
import json
from fractions import Fraction
from math import hypot, isqrt, lcm, sqrt

from .exact import Surd, smax, smin
from .lattice import cross, is_primitive


def as_rational(v):
    """Parse ``"p/q"``, decimal strings, ints and floats into a Fraction."""
    if isinstance(v, Fraction):
        return v
    if isinstance(v, float):
        return Fraction(repr(v))
    return Fraction(v)


def _num(x):
    # keep integers as int so the hot paths stay in int arithmetic
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


class ConvexBody(abc.ABC):
    """Compact convex body in the plane."""

    def __init__(self):
        self.n_contains = 0
        self.n_chord = 0

    @property
    def oracle_calls(self):
        return self.n_contains + self.n_chord

    def reset_counters(self):
        self.n_contains = 0
        self.n_chord = 0

    @abc.abstractmethod
    def contains(self, x, y):
        ...

    @abc.abstractmethod
    def chord_exact(self, ox, oy, dx, dy):
        ...

    @abc.abstractmethod
    def bbox(self):
        """Float box ``(xmin, xmax, ymin, ymax)`` containing the body."""

    def lattice_range(self, ox, oy, dx, dy):
        """``(ceil(t_lo), floor(t_hi))`` of the chord, or None if empty.

        A nonempty chord without integer parameters yields lo == hi + 1.
        """
        ch = self.chord_exact(ox, oy, dx, dy)
        if ch is None:
            return None
        return ch[0].ceil(), ch[1].floor()

    def chord(self, origin, direction):
        ch = self.chord_exact(origin[0], origin[1], direction[0], direction[1])
        if ch is None:
            return None
        return float(ch[0]), float(ch[1])

    def diameter(self):
        """Upper bound on the diameter (bounding-box diagonal)."""
        x0, x1, y0, y1 = self.bbox()
        return hypot(x1 - x0, y1 - y0)


class DiskBody(ConvexBody):
    """Closed disk with rational center and rational squared radius."""

    def __init__(self, center, radius_sq):
        super().__init__()
        cx, cy = as_rational(center[0]), as_rational(center[1])
        r2 = as_rational(radius_sq)
        if r2 <= 0:
            raise ValueError("radius_sq must be positive")
        self.center = (cx, cy)
        self.radius_sq = r2
        self._D = D = lcm(cx.denominator, cy.denominator)
        self._X = cx.numerator * (D // cx.denominator)
        self._Y = cy.numerator * (D // cy.denominator)
        self._N = r2.numerator
        self._M = r2.denominator
        self._ND2 = self._N * D * D
        self._MND2 = self._M * self._ND2

    @classmethod
    def from_radius(cls, center, radius):
        r = as_rational(radius)
        return cls(center, r * r)

    @property
    def radius(self):
        return sqrt(self.radius_sq)

    def __repr__(self):
        return (f"DiskBody(center=({self.center[0]}, {self.center[1]}), "
                f"radius_sq={self.radius_sq})")

    def contains(self, x, y):
        self.n_contains += 1
        if type(x) is int and type(y) is int:
            wx = self._D * x - self._X
            wy = self._D * y - self._Y
            return self._M * (wx * wx + wy * wy) <= self._ND2
        ex = x - self.center[0]
        ey = y - self.center[1]
        return ex * ex + ey * ey <= self.radius_sq

    def _quadratic(self, ox, oy, dx, dy):
        # center (X, Y)/D, radius_sq N/M, w = D*o - (X, Y):
        # t = (-M*P +- sqrt(E)) / (M*D*L) with P = w.d and L = |d|^2
        D, M = self._D, self._M
        wx = D * ox - self._X
        wy = D * oy - self._Y
        L = dx * dx + dy * dy
        P = wx * dx + wy * dy
        E = M * M * (P * P - L * (wx * wx + wy * wy)) + L * self._MND2
        return M * P, E, M * D * L

    def chord_exact(self, ox, oy, dx, dy):
        self.n_chord += 1
        mp, E, A = self._quadratic(ox, oy, dx, dy)
        if E < 0:
            return None
        return Surd(-mp, -1, E, A), Surd(-mp, 1, E, A)

    def lattice_range(self, ox, oy, dx, dy):
        self.n_chord += 1
        D, M = self._D, self._M
        wx = D * ox - self._X
        wy = D * oy - self._Y
        L = dx * dx + dy * dy
        P = wx * dx + wy * dy
        E = M * M * (P * P - L * (wx * wx + wy * wy)) + L * self._MND2
        if E < 0:
            return None
        s = isqrt(E)
        mp = M * P
        A = M * D * L
        return -((mp + s) // A), (s - mp) // A

    def bbox(self):
        r = self.radius
        cx, cy = float(self.center[0]), float(self.center[1])
        return cx - r, cx + r, cy - r, cy + r

    def diameter(self):
        return 2 * self.radius


def _angle_lt(a, b):
    """Strict angular order of nonzero vectors, starting at the +x axis."""
    ha = 0 if (a[1] > 0 or (a[1] == 0 and a[0] > 0)) else 1
    hb = 0 if (b[1] > 0 or (b[1] == 0 and b[0] > 0)) else 1
    if ha != hb:
        return ha < hb
    return a[0] * b[1] - a[1] * b[0] > 0


class PolygonBody(ConvexBody):
    """Strictly convex polygon with counterclockwise (rational) vertices.

    Chords take O(log n): the two vertices extreme across the query
    direction are found by binary search over the angularly sorted edges,
    then each monotone chain between them is bisected.
    """

    def __init__(self, vertices):
        super().__init__()
        pts = [(_num(as_rational(x)), _num(as_rational(y))) for x, y in vertices]
        n = len(pts)
        if n < 3:
            raise ValueError("a polygon needs at least 3 vertices")
        for i in range(n):
            a, b, c = pts[i - 1], pts[i], pts[(i + 1) % n]
            turn = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
            if turn <= 0:
                raise ValueError("vertices must be strictly convex and counterclockwise")
        edges = [(pts[(i + 1) % n][0] - pts[i][0], pts[(i + 1) % n][1] - pts[i][1])
                 for i in range(n)]
        start = 0
        for i in range(1, n):
            if _angle_lt(edges[i], edges[start]):
                start = i
        self.vertices = pts[start:] + pts[:start]
        self._edges = edges[start:] + edges[:start]
        self.n = n

    def __repr__(self):
        return f"PolygonBody({self.vertices!r})"

    def _first_edge_not_before(self, phi):
        lo, hi = 0, self.n
        edges = self._edges
        while lo < hi:
            mid = (lo + hi) // 2
            if _angle_lt(edges[mid], phi):
                lo = mid + 1
            else:
                hi = mid
        return lo % self.n

    def contains(self, x, y):
        self.n_contains += 1
        v = self.vertices
        n = self.n
        x0, y0 = v[0]
        px, py = x - x0, y - y0
        if (v[1][0] - x0) * py - (v[1][1] - y0) * px < 0:
            return False
        if (v[-1][0] - x0) * py - (v[-1][1] - y0) * px > 0:
            return False
        lo, hi = 1, n - 1
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if (v[mid][0] - x0) * py - (v[mid][1] - y0) * px >= 0:
                lo = mid
            else:
                hi = mid
        a, b = v[lo], v[lo + 1]
        return (b[0] - a[0]) * (y - a[1]) - (b[1] - a[1]) * (x - a[0]) >= 0

    def chord_exact(self, ox, oy, dx, dy):
        self.n_chord += 1
        v = self.vertices
        n = self.n
        d = (dx, dy)
        L = dx * dx + dy * dy

        def s(w):
            return dx * w[1] - dy * w[0]

        def t_of(w):
            return Fraction((w[0] - ox) * dx + (w[1] - oy) * dy) / L

        s0 = dx * oy - dy * ox
        ib = self._first_edge_not_before(d)
        it = self._first_edge_not_before((-dx, -dy))
        sb, st = s(v[ib]), s(v[it])
        if s0 < sb or s0 > st:
            return None
        if s0 == sb or s0 == st:
            k = ib if s0 == sb else it
            ts = [t_of(v[j % n]) for j in (k - 1, k, k + 1) if s(v[j % n]) == s0]
            return Surd.of(min(ts)), Surd.of(max(ts))

        def crossing(first, last, rising):
            # chain first..last (ccw indices); s is monotone along it
            m = (last - first) % n
            lo, hi = 0, m
            while hi - lo > 1:
                mid = (lo + hi) // 2
                sm = s(v[(first + mid) % n])
                if (sm <= s0) if rising else (sm >= s0):
                    lo = mid
                else:
                    hi = mid
            w1, w2 = v[(first + lo) % n], v[(first + lo + 1) % n]
            s1, s2 = s(w1), s(w2)
            lam = Fraction(s0 - s1) / (s2 - s1)
            base = (w1[0] - ox) * dx + (w1[1] - oy) * dy
            step = (w2[0] - w1[0]) * dx + (w2[1] - w1[1]) * dy
            return (base + lam * step) / L

        t_hi = crossing(ib, it, True)
        t_lo = crossing(it, ib, False)
        return Surd.of(t_lo), Surd.of(t_hi)

    def chord_scan(self, ox, oy, dx, dy):
        """O(n) reference chord: intersect the edge half-planes."""
        lo = hi = None
        v = self.vertices
        for i in range(self.n):
            a, b = v[i], v[(i + 1) % self.n]
            e = (b[0] - a[0], b[1] - a[1])
            alpha = cross(e, (ox - a[0], oy - a[1]))
            beta = cross(e, (dx, dy))
            if beta == 0:
                if alpha < 0:
                    return None
                continue
            bound = Fraction(-alpha) / beta
            if beta > 0:
                lo = bound if lo is None else max(lo, bound)
            else:
                hi = bound if hi is None else min(hi, bound)
        if lo is None or hi is None or lo > hi:
            return None
        return lo, hi

    def bbox(self):
        xs = [float(p[0]) for p in self.vertices]
        ys = [float(p[1]) for p in self.vertices]
        return min(xs), max(xs), min(ys), max(ys)


class ClippedBody(ConvexBody):
    """Intersection of a body with half-planes ``a*x + b*y <= c``."""

    def __init__(self, inner, box=None, halfplanes=()):
        super().__init__()
        self.inner = inner
        hp = [tuple(as_rational(c) for c in h) for h in halfplanes]
        if box is not None:
            x0, x1, y0, y1 = (as_rational(c) for c in box)
            hp += [(-1, 0, -x0), (1, 0, x1), (0, -1, -y0), (0, 1, y1)]
        self.box = box
        self.halfplanes = hp

    def contains(self, x, y):
        self.n_contains += 1
        for a, b, c in self.halfplanes:
            if a * x + b * y > c:
                return False
        return self.inner.contains(x, y)

    def chord_exact(self, ox, oy, dx, dy):
        self.n_chord += 1
        lo = hi = None
        for a, b, c in self.halfplanes:
            k = a * dx + b * dy
            rhs = c - a * ox - b * oy
            if k == 0:
                if rhs < 0:
                    return None
                continue
            bound = Surd.of(Fraction(rhs) / k)
            if k > 0:
                hi = bound if hi is None else smin(hi, bound)
            else:
                lo = bound if lo is None else smax(lo, bound)
        if lo is not None and hi is not None and lo > hi:
            return None
        ch = self.inner.chord_exact(ox, oy, dx, dy)
        if ch is None:
            return None
        lo = ch[0] if lo is None else smax(lo, ch[0])
        hi = ch[1] if hi is None else smin(hi, ch[1])
        if lo > hi:
            return None
        return lo, hi

    def bbox(self):
        x0, x1, y0, y1 = self.inner.bbox()
        if self.box is not None:
            bx0, bx1, by0, by1 = (float(c) for c in self.box)
            x0, x1, y0, y1 = max(x0, bx0), min(x1, bx1), max(y0, by0), min(y1, by1)
        return x0, x1, y0, y1


class UnionBody(ConvexBody):
    """Union of two bodies whose union is known to be convex.

    On a convex union the chord is the interval hull of the two chords.
    """

    def __init__(self, first, second):
        super().__init__()
        self.first = first
        self.second = second

    def contains(self, x, y):
        self.n_contains += 1
        return self.first.contains(x, y) or self.second.contains(x, y)

    def chord_exact(self, ox, oy, dx, dy):
        self.n_chord += 1
        a = self.first.chord_exact(ox, oy, dx, dy)
        b = self.second.chord_exact(ox, oy, dx, dy)
        if a is None:
            return b
        if b is None:
            return a
        return smin(a[0], b[0]), smax(a[1], b[1])

    def bbox(self):
        a, b = self.first.bbox(), self.second.bbox()
        return min(a[0], b[0]), max(a[1], b[1]), min(a[2], b[2]), max(a[3], b[3])


class TrapezoidUnionBody(UnionBody):
    """``C' u T`` for a clipped body C' and a vertical trapezoid T whose top
    edge joins the two x-extreme points of C'."""

    def __init__(self, clipped, trapezoid, checks=16, rng=None):
        super().__init__(clipped, trapezoid)
        self.clipped = clipped
        self.trapezoid = trapezoid
        self._check_convex_union(checks, rng)

    def _check_convex_union(self, checks, rng):
        import random
        rng = rng or random.Random(0)
        x0, x1, y0, y1 = self.bbox()
        for _ in range(checks):
            ox = rng.randint(int(x0) - 1, int(x1) + 1)
            oy = rng.randint(int(y0) - 1, int(y1) + 1)
            dx, dy = rng.randint(-5, 5), rng.randint(-5, 5)
            if (dx, dy) == (0, 0):
                continue
            a = self.clipped.chord_exact(ox, oy, dx, dy)
            b = self.trapezoid.chord_exact(ox, oy, dx, dy)
            if a is None or b is None:
                continue
            if a[1] < b[0] or b[1] < a[0]:
                raise ValueError("trapezoid union is not convex along a sampled line")


class ReflectedBody(ConvexBody):
    """Point reflection ``(x, y) -> (-x, -y)`` of another body."""

    def __init__(self, inner):
        super().__init__()
        self.inner = inner

    def contains(self, x, y):
        self.n_contains += 1
        return self.inner.contains(-x, -y)

    def chord_exact(self, ox, oy, dx, dy):
        self.n_chord += 1
        return self.inner.chord_exact(-ox, -oy, -dx, -dy)

    def lattice_range(self, ox, oy, dx, dy):
        self.n_chord += 1
        return self.inner.lattice_range(-ox, -oy, -dx, -dy)

    def bbox(self):
        x0, x1, y0, y1 = self.inner.bbox()
        return -x1, -x0, -y1, -y0


# -- query functions ---------------------------------------------------------

def _check_dir(v):
    if not is_primitive(v):
        raise ValueError(f"direction {tuple(v)} is not primitive")


def contains(body, p):
    return body.contains(p[0], p[1])


def chord(body, origin, direction):
    """Float chord ``(t_lo, t_hi)`` in units of ``direction``, or None."""
    _check_dir(direction)
    return body.chord(origin, direction)


def last_inside(body, u, v):
    """Largest k >= 0 with u + k*v in the body; None if u is outside."""
    _check_dir(v)
    rng = body.lattice_range(u[0], u[1], v[0], v[1])
    if rng is None or rng[0] > 0 or rng[1] < 0:
        return None
    return rng[1]


def max_seg_index(body, u, v):
    """Largest k >= 0 such that the closed segment [u+k*v, u+(k+1)*v]
    meets the body; None if the ray from u misses it."""
    _check_dir(v)
    rng = body.lattice_range(u[0], u[1], v[0], v[1])
    if rng is None or rng[1] < 0:
        return None
    return rng[1]


def min_seg_index(body, u, v):
    """Smallest k >= 0 such that [u+k*v, u+(k+1)*v] meets the body."""
    _check_dir(v)
    rng = body.lattice_range(u[0], u[1], v[0], v[1])
    if rng is None or rng[1] < 0:
        return None
    return max(0, rng[0] - 1)


def parse_shape(shape):
    """Build a body from the JSON shape format (dict or JSON text)."""
    if isinstance(shape, str):
        shape = json.loads(shape)
    if not isinstance(shape, dict):
        raise ValueError("shape must be a JSON object")
    kind = shape.get("type")
    if kind == "disk":
        center = (as_rational(shape.get("cx", 0)), as_rational(shape.get("cy", 0)))
        if "r2" in shape:
            return DiskBody(center, as_rational(shape["r2"]))
        return DiskBody.from_radius(center, shape["r"])
    if kind == "polygon":
        return PolygonBody(shape["vertices"])
    raise ValueError(f"unknown shape type: {kind!r}")

