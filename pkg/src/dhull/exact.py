"""Exact real numbers of the form (p + q*sqrt(d)) / a.

Chord endpoints of a disk with rational center and rational squared radius
are of this form; chord endpoints of rational polygons are plain rationals
(q = 0).  Comparison, floor and ceil are exact.
"""

from fractions import Fraction
from functools import total_ordering
from math import isqrt, sqrt


def _sgn(v):
    return (v > 0) - (v < 0)


def sign_root(a, b, d):
    """Sign of a + b*sqrt(d) for integers a, b and d >= 0."""
    if b == 0 or d == 0:
        return _sgn(a)
    sa, sb = _sgn(a), _sgn(b)
    if sa == 0 or sa == sb:
        return sb
    diff = a * a - b * b * d
    if diff > 0:
        return sa
    if diff < 0:
        return sb
    return 0


def sign_two_roots(a, b, d1, c, d2):
    """Sign of a + b*sqrt(d1) + c*sqrt(d2)."""
    if d1 == d2:
        return sign_root(a, b + c, d1)
    su = sign_root(a, b, d1)
    sv = _sgn(c) if d2 else 0
    if sv == 0:
        return su
    if su == 0 or su == sv:
        return sv
    # opposite signs: compare squared magnitudes
    cmp = sign_root(a * a + b * b * d1 - c * c * d2, 2 * a * b, d1)
    if cmp > 0:
        return su
    if cmp < 0:
        return sv
    return 0


@total_ordering
class Surd:
    __slots__ = ("p", "q", "d", "a")

    def __init__(self, p, q=0, d=0, a=1):
        if a <= 0:
            raise ValueError("denominator must be positive")
        if d < 0:
            raise ValueError("negative radicand")
        if q == 0 or d == 0:
            q, d = 0, 0
        self.p, self.q, self.d, self.a = p, q, d, a

    @classmethod
    def of(cls, x):
        if isinstance(x, Surd):
            return x
        x = Fraction(x)
        return cls(x.numerator, 0, 0, x.denominator)

    @property
    def is_rational(self):
        return self.q == 0 or isqrt(self.d) ** 2 == self.d

    def to_fraction(self):
        if not self.is_rational:
            raise ValueError("irrational value")
        return Fraction(self.p + self.q * isqrt(self.d), self.a)

    def __float__(self):
        return (self.p + self.q * sqrt(self.d)) / self.a

    def floor(self):
        if self.q == 0:
            return self.p // self.a
        m = self.q * self.q * self.d
        s = isqrt(m)
        if self.q > 0:
            return (self.p + s) // self.a
        # floor((p - sqrt(m)) / a) = -ceil((-p + sqrt(m)) / a)
        if s * s == m:
            return (self.p - s) // self.a
        return -((-self.p + s) // self.a + 1)

    def ceil(self):
        return -Surd(-self.p, -self.q, self.d, self.a).floor()

    def _cmp(self, other):
        o = Surd.of(other)
        return sign_two_roots(self.p * o.a - o.p * self.a,
                              self.q * o.a, self.d, -o.q * self.a, o.d)

    def __eq__(self, other):
        try:
            return self._cmp(other) == 0
        except TypeError:
            return NotImplemented

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __hash__(self):
        return hash((self.p, self.q, self.d, self.a))

    def __neg__(self):
        return Surd(-self.p, -self.q, self.d, self.a)

    def __repr__(self):
        if self.q == 0:
            return f"Surd({self.p}/{self.a})"
        return f"Surd(({self.p} + {self.q}*sqrt({self.d}))/{self.a})"


def smin(a, b):
    return a if a <= b else b


def smax(a, b):
    return a if a >= b else b
