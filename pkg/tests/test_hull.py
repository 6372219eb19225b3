import math
import random
from fractions import Fraction as F

import pytest

from dhull.baseline import naive_hull
from dhull.edgedir import PHI, stage_bound
from dhull.hull import (HullChain, discrete_hull, discrete_hull_from,
                        find_hull_vertex_general, find_lowest_vertex,
                        lattice_bounding_box)
from dhull.lattice import orientation
from dhull.oracle import DiskBody, PolygonBody

from oracles import boundary_count, disk_points, polygon_points, textbook_hull

HALF = (F(1, 2), F(1, 2))


def test_lowest_vertex_examples():
    assert find_lowest_vertex(DiskBody(HALF, 100), (0, 0)) == (-2, -9)
    assert find_lowest_vertex(DiskBody((0, 0), 1), (0, 0)) == (0, -1)
    assert find_lowest_vertex(DiskBody((0, 0), F(1, 4)), (0, 0)) == (0, 0)
    with pytest.raises(ValueError, match="seed outside body"):
        find_lowest_vertex(DiskBody(HALF, 100), (20, 0))


def test_hull_examples():
    h = discrete_hull_from(DiskBody((0, 0), 4), (0, -2))
    assert h.vertices == [(0, -2), (2, 0), (0, 2), (-2, 0)]
    assert h.edge_weights == [2, 2, 2, 2]
    assert h.boundary_count == 8
    h = discrete_hull_from(DiskBody((0, 0), 1), (0, -1))
    assert h.vertices == [(0, -1), (1, 0), (0, 1), (-1, 0)]
    sq = PolygonBody([(0, 0), (5, 0), (5, 5), (0, 5)])
    h = discrete_hull_from(sq, (0, 0))
    assert h.vertices == [(0, 0), (5, 0), (5, 5), (0, 5)]
    assert h.boundary_count == 20


def test_half_center_radius_ten():
    d = DiskBody(HALF, 100)
    h = discrete_hull(d, (0, 0))
    assert h.vertices[:3] == [(-2, -9), (3, -9), (7, -7)]
    assert h.vertex_count == 16 and h.boundary_count == 40
    assert h.vertices == naive_hull(d).vertices


def test_degenerate_hulls():
    h = discrete_hull(DiskBody((0, 0), F(1, 4)), (0, 0))
    assert h.vertices == [(0, 0)] and h.edge_weights == [] and h.boundary_count == 1
    # a thin sliver holding the three collinear points (0,0), (1,0), (2,0)
    sliver = PolygonBody([(F(-1, 2), F(-1, 10)), (F(5, 2), F(-1, 10)),
                          (F(5, 2), F(1, 10)), (F(-1, 2), F(1, 10))])
    h = discrete_hull(sliver, (1, 0))
    assert h.vertices == [(0, 0), (2, 0)]
    assert h.edge_weights == [2] and h.boundary_count == 3


def test_normalized_rotation():
    h = HullChain([(2, 0), (0, 2), (0, 0)], [2, 2, 2], 6, [1, 2, 3])
    n = h.normalized()
    assert n.vertices == [(0, 0), (2, 0), (0, 2)]
    assert n.edge_weights == [2, 2, 2] and n.iterations == [3, 1, 2]


def _check_chain(h, body, pts):
    vs = h.vertices
    n = len(vs)
    assert vs == textbook_hull(pts)
    assert h.boundary_count == boundary_count(vs)
    assert all(body.contains(*v) for v in vs)
    if n >= 3:
        assert all(orientation(vs[i - 1], vs[i], vs[(i + 1) % n]) == 1 for i in range(n))
        assert sum(h.edge_weights) == h.boundary_count
        assert all(w >= 1 for w in h.edge_weights)


def test_disk_hulls_match_bruteforce():
    rng = random.Random(2)
    for _ in range(300):
        den = rng.choice([1, 2, 3, 1024])
        c = (F(rng.randrange(-den, den), den), F(rng.randrange(-den, den), den))
        r2 = F(rng.randint(1, 3000), rng.choice([1, 1, 2, 7]))
        pts = disk_points(c, r2)
        if not pts:
            continue
        d = DiskBody(c, r2)
        h = discrete_hull(d, rng.choice(pts))
        _check_chain(h, d, pts)
        r = math.sqrt(r2)
        assert h.vertex_count <= 6 * 2 ** (1 / 3) * (2 * r) ** (2 / 3)
        delta = 2 * r
        assert h.oracle_calls <= 12 * h.vertex_count * (2 + math.ceil(math.log(max(delta, 1), PHI)))
        assert h.max_iterations <= stage_bound(delta)


def test_polygon_hulls_match_bruteforce():
    from test_oracle import random_polygon
    rng = random.Random(4)
    for _ in range(200):
        poly = random_polygon(rng, rng.choice([3, 10, 40]))
        pts = polygon_points(poly.vertices)
        if not pts:
            assert find_hull_vertex_general(poly, poly.vertices[0]) is None
            continue
        v0 = find_hull_vertex_general(poly, poly.vertices[0])
        assert v0 in textbook_hull(pts)
        h = discrete_hull_from(poly, v0).normalized()
        _check_chain(h, poly, pts)
        assert naive_hull(poly).vertices == h.vertices


def test_general_vertex_examples():
    d = DiskBody(HALF, 100)
    v = find_hull_vertex_general(d, HALF)
    assert v in textbook_hull(disk_points(HALF, 100))
    assert find_hull_vertex_general(DiskBody(HALF, F(9, 100)), HALF) is None


def test_general_vertex_uses_trapezoid_on_large_disks():
    rng = random.Random(8)
    for _ in range(6):
        c = (F(rng.randrange(0, 2 ** 20), 2 ** 20), F(rng.randrange(0, 2 ** 20), 2 ** 20))
        d = DiskBody(c, rng.randint(200, 1500) ** 2)
        v = find_hull_vertex_general(d, c)
        assert v in naive_hull(d).vertices


def test_lattice_bounding_box():
    assert lattice_bounding_box(DiskBody(HALF, 100), HALF) == (-9, 10, -9, 10)
    assert lattice_bounding_box(DiskBody(HALF, F(9, 100)), HALF) is None


def test_triangle_vertex_bound():
    rng = random.Random(12)
    for _ in range(300):
        scale = 10 ** rng.randint(1, 5)
        a = (rng.randint(-scale, scale), rng.randint(-scale, scale))
        b = (rng.randint(-scale, scale), rng.randint(-scale, scale))
        den = rng.randint(2, 1000)
        c = (F(rng.randint(-scale * den, scale * den), den), F(rng.randint(-scale * den, scale * den), den))
        o = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
        if o == 0:
            continue
        tri = PolygonBody([a, b, c] if o > 0 else [a, c, b])
        delta = max(math.dist(a, b), math.dist(a, c), math.dist(b, c))
        h = discrete_hull_from(tri, a)
        assert h.vertex_count <= 2 * math.ceil(math.log(delta, PHI)) + 7
