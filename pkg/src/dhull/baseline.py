"""Naive discrete hull: a monotone-chain scan over lattice columns.

Every integer column meeting the body contributes its lowest and highest
lattice point, generated on demand by one vertical ray shooting, and the
two chains are maintained incrementally.  Runs in time linear in the width
of the body.
"""

import math

from .hull import HullChain
from .lattice import LatticePoint, edge_weight


def _push(chain, x, y, keep):
    # keep(turn) decides whether the middle point survives
    while len(chain) >= 2:
        ax, ay = chain[-2]
        bx, by = chain[-1]
        if keep((bx - ax) * (y - ay) - (by - ay) * (x - ax)):
            break
        chain.pop()
    chain.append((x, y))


def _lower_keep(turn):
    return turn > 0


def _upper_keep(turn):
    return turn < 0


def lattice_columns(body):
    """Yield ``(x, ylo, yhi)`` for each integer column holding lattice points."""
    x0, x1, _, _ = body.bbox()
    for x in range(math.floor(x0) - 1, math.ceil(x1) + 2):
        rng = body.lattice_range(x, 0, 0, 1)
        if rng is None or rng[0] > rng[1]:
            continue
        yield x, rng[0], rng[1]


def naive_hull(body):
    calls0 = body.oracle_calls
    lower, upper = [], []
    for x, lo, hi in lattice_columns(body):
        _push(lower, x, lo, _lower_keep)
        _push(upper, x, hi, _upper_keep)
    if not lower:
        raise ValueError("no lattice points")
    # lower runs left to right, upper right to left once reversed
    upper.reverse()
    # the chains share their end columns; drop repeated points
    verts = []
    for p in lower + upper:
        if not verts or verts[-1] != p:
            verts.append(p)
    while len(verts) > 1 and verts[0] == verts[-1]:
        verts.pop()
    verts = _drop_collinear(verts)
    verts = [LatticePoint(*p) for p in verts]
    calls = body.oracle_calls - calls0
    if len(verts) == 1:
        return HullChain(verts, [], 1, [], calls).normalized()
    if len(verts) == 2:
        w = edge_weight(verts[0], verts[1])
        return HullChain(verts, [w], w + 1, [], calls).normalized()
    weights = [edge_weight(verts[i], verts[(i + 1) % len(verts)])
               for i in range(len(verts))]
    return HullChain(verts, weights, sum(weights), [], calls).normalized()


def _drop_collinear(verts):
    n = len(verts)
    if n < 3:
        return verts
    out = []
    for i in range(n):
        a, b, c = verts[i - 1], verts[i], verts[(i + 1) % n]
        if (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]) != 0:
            out.append(b)
    if not out:
        # every point on one line: keep the two ends
        ends = sorted(set(verts))
        return [ends[0], ends[-1]]
    return out
