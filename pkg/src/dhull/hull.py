"""Output-sensitive discrete hull of a convex body.

The hull is traced counterclockwise one edge at a time: the edge direction
comes from :func:`dhull.edgedir.find_edge_direction` and the edge length
from a single discrete ray shooting.  A starting vertex is found either by
a doubling search for the lowest lattice row (lattice-connected bodies) or
by the trapezoid bootstrap of :func:`find_hull_vertex_general`, which only
needs some point of the body.
"""

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .edgedir import PHI, QUADRANTS, QuadrantFrame, find_edge_direction, stage_bound
from .lattice import LatticePoint
from .oracle import ClippedBody, PolygonBody, ReflectedBody, TrapezoidUnionBody
from .exact import Surd


@dataclass
class HullChain:
    vertices: list
    edge_weights: list
    boundary_count: int
    iterations: list = field(default_factory=list)
    oracle_calls: int = 0

    @property
    def vertex_count(self):
        return len(self.vertices)

    @property
    def max_iterations(self):
        return max(self.iterations, default=0)

    def normalized(self):
        """Same chain rotated to start at the lowest, then leftmost, vertex."""
        if not self.vertices:
            return self
        k = min(range(len(self.vertices)),
                key=lambda i: (self.vertices[i][1], self.vertices[i][0]))
        n = len(self.vertices)
        ew = self.edge_weights
        if len(ew) == n:
            ew = ew[k:] + ew[:k]
        its = self.iterations
        if len(its) == n:
            its = its[k:] + its[:k]
        return HullChain(self.vertices[k:] + self.vertices[:k], ew,
                         self.boundary_count, its, self.oracle_calls)


def _row_points(body, y):
    rng = body.lattice_range(0, y, 1, 0)
    if rng is None or rng[0] > rng[1]:
        return None
    return rng


def find_lowest_vertex(body, seed):
    """Leftmost lattice point on the lowest lattice row of the body.

    Rows below the seed are probed at distances 1, 2, 4, ... until one has
    no lattice point, then the boundary row is bisected.  Correct when the
    body's lattice points are lattice-connected.
    """
    sx, sy = int(seed[0]), int(seed[1])
    if not body.contains(sx, sy):
        raise ValueError("seed outside body")
    good, step = sy, 1
    while True:
        bad = sy - step
        if _row_points(body, bad) is None:
            break
        good = bad
        step *= 2
    while good - bad > 1:
        mid = (good + bad) // 2
        if _row_points(body, mid) is None:
            bad = mid
        else:
            good = mid
    lo, _ = _row_points(body, good)
    return LatticePoint(lo, good)


def vertex_budget(diameter):
    return int(7 * max(diameter, 1.0) ** (2 / 3)) + 16


def discrete_hull_from(body, v0, hint=None, max_vertices=None, max_stages=None):
    """Trace the discrete hull counterclockwise from the hull vertex ``v0``.

    ``hint`` is the quadrant expected to contain the first edge direction
    (quadrant I is right for the lowest-leftmost vertex); without it the
    first step searches all four quadrants.  ``max_vertices`` truncates the
    trace (used by the bootstrap); otherwise exceeding the lattice-polygon
    vertex bound is treated as an internal error.
    """
    v0 = LatticePoint(int(v0[0]), int(v0[1]))
    diam = body.diameter()
    if max_stages is None:
        max_stages = stage_bound(diam) + 4
    limit = max_vertices if max_vertices is not None else vertex_budget(diam)
    calls0 = body.oracle_calls
    vertices = [v0]
    weights = []
    iterations = []
    p = v0
    while True:
        found = find_edge_direction(body, p, hint, max_stages)
        if found is None:
            break
        e, its, hint = found
        k = body.lattice_range(p[0], p[1], e[0], e[1])[1]
        iterations.append(its)
        weights.append(k)
        p = LatticePoint(p[0] + k * e[0], p[1] + k * e[1])
        if p == v0:
            break
        if len(vertices) >= limit:
            if max_vertices is not None:
                break
            raise RuntimeError(
                f"hull of {body!r} exceeds {limit} vertices; expected at most "
                f"7*diam^(2/3) + 16")
        vertices.append(p)
    if len(vertices) == 1:
        return HullChain(vertices, [], 1, iterations, body.oracle_calls - calls0)
    if len(vertices) == 2 and max_vertices is None:
        w = weights[0]
        return HullChain(vertices, [w], w + 1, iterations, body.oracle_calls - calls0)
    return HullChain(vertices, weights, sum(weights), iterations,
                     body.oracle_calls - calls0)


def discrete_hull(body, seed):
    """Discrete hull of a lattice-connected body containing lattice ``seed``."""
    v0 = find_lowest_vertex(body, seed)
    return discrete_hull_from(body, v0, hint=QUADRANTS[0])


# -- vertex search from an arbitrary point -----------------------------------

def _column_hit(body, x):
    return body.chord_exact(x, 0, 0, 1) is not None


def _row_hit(body, y):
    return body.chord_exact(0, y, 1, 0) is not None


def _extent(hit, start, direction):
    """Last integer from ``start`` (assumed hit) along +-1 before a miss."""
    good, step = start, 1
    while True:
        bad = start + direction * step
        if not hit(bad):
            break
        good = bad
        step *= 2
    while abs(good - bad) > 1:
        mid = (good + bad) // 2
        if hit(mid):
            good = mid
        else:
            bad = mid
    return good


def _lattice_interval(hit, c):
    """Integer interval of lines meeting the body, given a body coordinate c."""
    lo, hi = math.floor(c), math.ceil(c)
    start = lo if hit(lo) else hi if hit(hi) else None
    if start is None:
        return None
    return _extent(hit, start, -1), _extent(hit, start, 1)


def lattice_bounding_box(body, p):
    """Integer box ``(x0, x1, y0, y1)`` of the body's lattice points.

    Rows are the integer lines y = const meeting the body; columns are
    those meeting the body *within* those rows, so the clipped body
    reaches both extreme columns.  Doubling searches start from the point
    p of the body.  None when the body provably holds no lattice point.
    """
    ys = _lattice_interval(lambda y: _row_hit(body, y), Fraction(p[1]))
    if ys is None:
        return None
    y0, y1 = ys
    rows = ClippedBody(body, halfplanes=[(0, -1, -y0), (0, 1, y1)])
    ch = rows.chord_exact(0, y0, 1, 0)
    xs = _lattice_interval(lambda x: _column_hit(rows, x),
                           _rational_between(ch[0], ch[1]))
    if xs is None:
        return None
    return xs[0], xs[1], y0, y1


def _rational_between(lo, hi):
    """A rational in the closed interval [lo, hi] of Surds."""
    if lo == hi:
        return lo.to_fraction()
    mid = (float(lo) + float(hi)) / 2
    for den in (1, 2, 4, 1 << 10, 1 << 20, 1 << 40):
        f = Fraction(round(mid * den), den)
        if lo <= f <= hi:
            return f
    return Fraction(mid)


def _column_point(body, x):
    ch = body.chord_exact(x, 0, 0, 1)
    return Fraction(x), _rational_between(ch[0], ch[1])


def _columns_hull_vertex(body, x0, x1):
    """Lowest-leftmost lattice point by vertical ray shooting; it is a hull
    vertex.  None if the columns hold no lattice point."""
    best = None
    for x in range(x0, x1 + 1):
        rng = body.lattice_range(x, 0, 0, 1)
        if rng is None or rng[0] > rng[1]:
            continue
        if best is None or rng[0] < best[1]:
            best = (x, rng[0])
    return None if best is None else LatticePoint(*best)


def bootstrap_chain_length(diameter):
    return 1 + 4 * (2 * math.ceil(math.log(max(2 * diameter, 1.0), PHI)) + 7)


def _vertex_below(clipped, p0, p1, delta, m):
    """Trace m hull vertices of C' u T, T the vertical trapezoid hanging
    below segment p0p1; return the first one lying in C'."""
    ybot = min(p0[1], p1[1]) - delta
    x0, x1 = int(p0[0]), int(p1[0])
    trap = PolygonBody([(x0, ybot), (x1, ybot), p1, p0])
    union = TrapezoidUnionBody(clipped, trap)
    start = LatticePoint(x0, math.ceil(ybot))
    # the start must be the lowest-leftmost lattice point of the union
    rng = union.lattice_range(0, start.y, 1, 0)
    if rng is None or rng[0] != x0 or union.lattice_range(x0, 0, 0, 1)[0] != start.y:
        raise RuntimeError("trapezoid start point is not extreme")
    chain = discrete_hull_from(union, start, hint=QUADRANTS[0], max_vertices=m)
    for v in chain.vertices:
        if clipped.contains(v[0], v[1]):
            return v
    return None


def find_hull_vertex_general(body, p):
    """Some vertex of the discrete hull, given any point ``p`` of the body.

    Needs no lattice point and no lattice-connectivity.  Returns None iff
    the body contains no lattice point.
    """
    box = lattice_bounding_box(body, p)
    if box is None:
        return None
    x0, x1, y0, y1 = box
    clipped = ClippedBody(body, box=box)
    if x0 == x1:
        rng = clipped.lattice_range(x0, 0, 0, 1)
        return LatticePoint(x0, rng[0]) if rng[0] <= rng[1] else None
    if y0 == y1:
        rng = clipped.lattice_range(0, y0, 1, 0)
        return LatticePoint(rng[0], y0) if rng[0] <= rng[1] else None
    p0 = _column_point(clipped, x0)
    p1 = _column_point(clipped, x1)
    if math.hypot(p1[0] - p0[0], p1[1] - p0[1]) < 100:
        return _columns_hull_vertex(clipped, x0, x1)
    delta = math.isqrt((x1 - x0) ** 2 + (y1 - y0) ** 2) + 1
    diam = math.hypot(x1 - x0 + 2, y1 - y0 + 2)
    m = bootstrap_chain_length(diam)
    v = _vertex_below(clipped, p0, p1, delta, m)
    if v is not None:
        return v
    # mirrored trapezoid above p0p1: reflect through the origin
    mirrored = ReflectedBody(clipped)
    v = _vertex_below(mirrored, (-p1[0], -p1[1]), (-p0[0], -p0[1]), delta, m)
    if v is not None:
        return LatticePoint(-v[0], -v[1])
    return None
