"""Continued fractions of positive rationals and their lattice convergents.

A convergent a_i/b_i is mapped to the lattice point (b_i, a_i).  The points
obey p_i = q_i * p_{i-1} + p_{i-2}, seeded with p_{-2} = (1, 0) and
p_{-1} = (0, 1).
"""

from dataclasses import dataclass
from fractions import Fraction

from .lattice import LatticePoint, cross, gcd

SEED_EVEN = LatticePoint(1, 0)
SEED_ODD = LatticePoint(0, 1)


@dataclass(frozen=True)
class Convergent:
    index: int
    quotient: int
    point: LatticePoint

    @property
    def value(self):
        return Fraction(self.point.y, self.point.x)


def parse_rational(r):
    """Return ``(a, b)`` for a positive reduced rational a/b.

    Accepts a Fraction, a positive int, an ``(a, b)`` pair or an ``"a/b"``
    string.  Pairs and strings are *not* reduced on the way in: a
    non-reduced input is an error.
    """
    if isinstance(r, str):
        text = r.strip()
        if "/" in text:
            num, den = text.split("/", 1)
            a, b = int(num), int(den)
        else:
            a, b = int(text), 1
    elif isinstance(r, tuple):
        a, b = r
    elif isinstance(r, (int, Fraction)):
        a, b = Fraction(r).numerator, Fraction(r).denominator
    else:
        raise TypeError(f"not a rational: {r!r}")
    if a < 1 or b < 1:
        raise ValueError(f"expected a positive rational, got {a}/{b}")
    if gcd(a, b) != 1:
        raise ValueError(f"{a}/{b} is not in reduced form")
    return a, b


def convergents(r):
    """Convergents of a positive rational via Euclid's algorithm."""
    a, b = parse_rational(r)
    out = []
    pp, p = SEED_EVEN, SEED_ODD
    i = 0
    while b:
        q, rem = divmod(a, b)
        pp, p = p, LatticePoint(q * p.x + pp.x, q * p.y + pp.y)
        out.append(Convergent(i, q, p))
        a, b = b, rem
        i += 1
    return out


def _shoot(side, start, step):
    """Largest k >= 0 with side(start + k*step) of the same sign as start's
    or zero, found by galloping along the discrete ray; also reports
    whether that point lies on the line."""
    s0 = side(start)

    def same(k):
        s = side((start[0] + k * step[0], start[1] + k * step[1]))
        return s == 0 or (s > 0) == (s0 > 0)

    lo, hi = 0, 1
    while same(hi):
        lo, hi = hi, 2 * hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if same(mid):
            lo = mid
        else:
            hi = mid
    return lo, side((start[0] + lo * step[0], start[1] + lo * step[1])) == 0


def geom_gcd(r):
    """Convergents of r computed geometrically against the line y = r*x.

    Each stage shoots the discrete ray from p_{i-2} in direction p_{i-1}
    and keeps the last lattice point before it crosses the line.  Side
    tests are exact cross products against the lattice vector (b, a).
    """
    a, b = parse_rational(r)
    target = (b, a)

    def side(p):
        return cross(target, p)

    out = []
    pp, p = SEED_EVEN, SEED_ODD
    i = 0
    while True:
        q, on_line = _shoot(side, pp, p)
        pp, p = p, LatticePoint(pp.x + q * p.x, pp.y + q * p.y)
        out.append(Convergent(i, q, p))
        if on_line:
            return out
        i += 1
