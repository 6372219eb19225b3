import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from dhull.cfrac import convergents, geom_gcd, parse_rational
from dhull.edgedir import PHI

CASES = {
    "31/14": ([2, 4, 1, 2], [(1, 2), (4, 9), (5, 11), (14, 31)]),
    "8/5": ([1, 1, 1, 2], [(1, 1), (1, 2), (2, 3), (5, 8)]),
    "3/1": ([3], [(1, 3)]),
    "1/1": ([1], [(1, 1)]),
}


@pytest.mark.parametrize("fn", [convergents, geom_gcd])
@pytest.mark.parametrize("r", sorted(CASES))
def test_known_expansions(fn, r):
    qs, ps = CASES[r]
    out = fn(r)
    assert [c.quotient for c in out] == qs
    assert [tuple(c.point) for c in out] == ps
    assert [c.index for c in out] == list(range(len(qs)))


def test_fraction_less_than_one_has_zero_first_quotient():
    out = geom_gcd(Fraction(5, 8))
    assert out[0].quotient == 0
    assert out[0].point == (1, 0)
    assert out[-1].point == (8, 5)
    assert [c.quotient for c in out] == [c.quotient for c in convergents("5/8")]


@pytest.mark.parametrize("bad", ["4/6", "0/3", "-1/2", (2, 0), "x", Fraction(-1, 3)])
def test_rejects_bad_input(bad):
    with pytest.raises(ValueError):
        convergents(bad)
    with pytest.raises(ValueError):
        geom_gcd(bad)


def test_parse_forms():
    assert parse_rational("31/14") == (31, 14)
    assert parse_rational(Fraction(8, 5)) == (8, 5)
    assert parse_rational(7) == (7, 1)


def reduced_pairs(limit):
    return st.tuples(st.integers(1, limit), st.integers(1, limit)).filter(
        lambda ab: math.gcd(*ab) == 1)


@settings(max_examples=400)
@given(reduced_pairs(10**4))
def test_geometric_equals_euclid(ab):
    a, b = ab
    assert geom_gcd(Fraction(a, b)) == convergents(Fraction(a, b))


def test_geometric_equals_euclid_small_exhaustive():
    for a in range(1, 80):
        for b in range(1, 80):
            if math.gcd(a, b) == 1:
                assert geom_gcd((a, b)) == convergents((a, b))


def _with_seeds(cs):
    return [(1, 0), (0, 1)] + [tuple(c.point) for c in cs]


@given(reduced_pairs(10**6))
def test_unimodular_alternating_and_length(ab):
    a, b = ab
    cs = geom_gcd((a, b))
    pts = _with_seeds(cs)
    signs = [pts[i][0] * pts[i + 1][1] - pts[i][1] * pts[i + 1][0] for i in range(len(pts) - 1)]
    assert all(abs(s) == 1 for s in signs)
    assert all(signs[i] == -signs[i + 1] for i in range(len(signs) - 1))
    assert all(math.gcd(*p) == 1 for p in pts[2:])
    assert len(cs) <= 2 + math.ceil(math.log(max(a, b), PHI))
    for i in range(len(cs)):
        q = cs[i].quotient
        assert pts[i + 2] == (q * pts[i + 1][0] + pts[i][0], q * pts[i + 1][1] + pts[i][1])


@given(reduced_pairs(10**6))
def test_super_fibonacci(ab):
    cs = geom_gcd(ab)
    pts = _with_seeds(cs)
    for i, c in enumerate(cs):
        if c.quotient == 0:
            # only q_0 may vanish (a < b); growth starts at the next index
            assert i == 0
            continue
        p, p1, p2 = pts[i + 2], pts[i + 1], pts[i]
        assert p[0] >= p1[0] + p2[0]
        assert p[1] >= p1[1] + p2[1]


def test_best_approximation_bruteforce():
    rnd = random.Random(7)
    for _ in range(60):
        b = rnd.randint(1, 200)
        a = rnd.randint(1, 400)
        if math.gcd(a, b) != 1:
            continue
        r = Fraction(a, b)
        for c in convergents(r)[:-1]:
            ai, bi = c.point[1], c.point[0]
            approx = Fraction(ai, bi)
            err = abs(approx - r)
            for d in range(1, bi + 1):
                for num in range(0, 3 * a + 3):
                    f = Fraction(num, d)
                    between = min(r, approx) <= f <= max(r, approx)
                    if between and abs(f - r) < err:
                        pytest.fail(f"{f} beats convergent {approx} of {r}")


def segments_cross(p, q, a, b):
    """Closed segments pq and ab intersect (exact)."""
    def o(u, v, w):
        c = (v[0] - u[0]) * (w[1] - u[1]) - (v[1] - u[1]) * (w[0] - u[0])
        return (c > 0) - (c < 0)

    def on(u, v, w):
        return min(u[0], v[0]) <= w[0] <= max(u[0], v[0]) and min(u[1], v[1]) <= w[1] <= max(u[1], v[1])

    d1, d2, d3, d4 = o(p, q, a), o(p, q, b), o(a, b, p), o(a, b, q)
    if d1 != d2 and d3 != d4:
        return True
    return (d1 == 0 and on(p, q, a)) or (d2 == 0 and on(p, q, b)) or \
        (d3 == 0 and on(a, b, p)) or (d4 == 0 and on(a, b, q))


def intersect_property_holds(a, b):
    pts = _with_seeds(geom_gcd((a, b)))
    target = (b, a)
    for i in range(2, len(pts)):
        p, prev = pts[i], pts[i - 1]
        if not segments_cross(p, (p[0] + prev[0], p[1] + prev[1]), (0, 0), target):
            return False
    return True


@given(reduced_pairs(10**5))
def test_convergent_steps_cross_target_segment(ab):
    assert intersect_property_holds(*ab)
