import math

import pytest
from hypothesis import given, strategies as st

from dhull.lattice import (LatticeVector, edge_weight, gcd, is_primitive,
                           orientation, reduce)

ints = st.integers(-10**6, 10**6)
small = st.integers(-100, 100)


def test_gcd_examples():
    assert gcd(12, 18) == 6
    assert gcd(0, 5) == 5
    assert gcd(7, 0) == 7
    with pytest.raises(ValueError, match="undefined gcd"):
        gcd(0, 0)
    with pytest.raises(ValueError):
        gcd(-2, 4)


@given(st.integers(0, 10**9), st.integers(0, 10**9))
def test_gcd_matches_math(a, b):
    if a == b == 0:
        return
    assert gcd(a, b) == math.gcd(a, b)


def test_reduce_examples():
    assert reduce((4, 6)) == LatticeVector(2, 3)
    assert reduce((-3, 0)) == LatticeVector(-1, 0)
    assert reduce((0, -7)) == (0, -1)
    with pytest.raises(ValueError):
        reduce((0, 0))


@given(ints, ints)
def test_reduce_is_idempotent_and_primitive(dx, dy):
    if dx == dy == 0:
        return
    r = reduce((dx, dy))
    assert is_primitive(r)
    assert reduce(r) == r
    assert r[0] * dy == r[1] * dx
    assert r[0] * dx + r[1] * dy > 0


def test_orientation_examples():
    assert orientation((0, 0), (1, 0), (0, 1)) == 1
    assert orientation((0, 0), (0, 1), (1, 0)) == -1
    assert orientation((0, 0), (1, 1), (3, 3)) == 0


@given(small, small, small, small, small, small, small, small)
def test_orientation_antisymmetric_and_translation_invariant(a, b, c, d, e, f, tx, ty):
    p, q, r = (a, b), (c, d), (e, f)
    assert orientation(p, q, r) == -orientation(p, r, q)
    assert orientation(p, q, r) == orientation(q, r, p)
    s = lambda z: (z[0] + tx, z[1] + ty)
    assert orientation(s(p), s(q), s(r)) == orientation(p, q, r)


def test_edge_weight_examples():
    assert edge_weight((0, 0), (6, 4)) == 2
    assert edge_weight((-2, -9), (3, -9)) == 5
    with pytest.raises(ValueError):
        edge_weight((1, 1), (1, 1))


@given(small, small, small, small)
def test_edge_weight_counts_lattice_points(a, b, c, d):
    if (a, b) == (c, d):
        return
    dx, dy = c - a, d - b
    # enumerate lattice points on the segment by stepping over the longer axis
    n = max(abs(dx), abs(dy))
    on = sum(1 for t in range(n + 1) if (t * dx) % n == 0 and (t * dy) % n == 0)
    assert edge_weight((a, b), (c, d)) == on - 1
