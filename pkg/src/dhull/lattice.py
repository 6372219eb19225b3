"""Exact integer primitives on the planar lattice Z x Z."""

from typing import NamedTuple


class LatticePoint(NamedTuple):
    x: int
    y: int


class LatticeVector(NamedTuple):
    dx: int
    dy: int


def gcd(a, b):
    """Greatest common divisor of two nonnegative integers.

    Unlike math.gcd, gcd(0, 0) is rejected so that a zero vector can never
    be silently reduced.
    """
    if a < 0 or b < 0:
        raise ValueError("gcd expects nonnegative integers")
    if a == 0 and b == 0:
        raise ValueError("undefined gcd")
    while b:
        a, b = b, a % b
    return a


def is_primitive(v):
    dx, dy = v
    if dx == 0 and dy == 0:
        return False
    return gcd(abs(dx), abs(dy)) == 1


def reduce(v):
    """Shortest lattice vector with the same direction as ``v``."""
    dx, dy = v
    if dx == 0 and dy == 0:
        raise ValueError("cannot reduce the zero vector")
    g = gcd(abs(dx), abs(dy))
    return LatticeVector(dx // g, dy // g)


def cross(u, v):
    return u[0] * v[1] - u[1] * v[0]


def orientation(p, q, r):
    """Sign of (q - p) x (r - p): +1 for a left turn, -1 right, 0 collinear."""
    c = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (c > 0) - (c < 0)


def edge_weight(p, q):
    """Number of lattice points on the closed segment pq, minus one."""
    if p[0] == q[0] and p[1] == q[1]:
        raise ValueError("edge_weight of a degenerate segment")
    return gcd(abs(q[0] - p[0]), abs(q[1] - p[1]))
