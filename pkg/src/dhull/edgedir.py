"""Direction of the next discrete-hull edge by convergent search.

From a hull vertex p, the primitive direction e of the next counterclockwise
edge is recovered without knowing e: the continued-fraction expansion of e
is replayed with ray shootings on the body instead of side tests against a
known line.  Odd convergents approach e from inside the body, even ones
from outside; every probe that lands on a lattice point of the body is a
candidate and e is the clockwise-most candidate.

The search runs in the positive quadrant of a rotated frame.  Quadrants are
half-open: +x belongs to I, +y to II, -x to III and -y to IV.
"""

import math
from dataclasses import dataclass, field
from typing import NamedTuple

from .lattice import LatticeVector, cross, reduce

PHI = (1 + math.sqrt(5)) / 2

# local (a, b) -> world (m00*a + m01*b, m10*a + m11*b)
_ROTATIONS = (
    (1, 0, 0, 1),
    (0, -1, 1, 0),
    (-1, 0, 0, -1),
    (0, 1, -1, 0),
)
_NAMES = ("I", "II", "III", "IV")


@dataclass(frozen=True)
class QuadrantFrame:
    quadrant: int  # 0..3 for I..IV

    @property
    def name(self):
        return _NAMES[self.quadrant]

    @property
    def matrix(self):
        return _ROTATIONS[self.quadrant]

    def to_world(self, v):
        m00, m01, m10, m11 = _ROTATIONS[self.quadrant]
        return LatticeVector(m00 * v[0] + m01 * v[1], m10 * v[0] + m11 * v[1])

    def to_local(self, v):
        # rotations are orthogonal: the inverse is the transpose
        m00, m01, m10, m11 = _ROTATIONS[self.quadrant]
        return LatticeVector(m00 * v[0] + m10 * v[1], m01 * v[0] + m11 * v[1])

    def next(self):
        return QuadrantFrame((self.quadrant + 1) % 4)

    @classmethod
    def of(cls, v):
        """Frame whose half-open quadrant contains the nonzero vector v."""
        x, y = v
        if x > 0 and y >= 0:
            return cls(0)
        if x <= 0 and y > 0:
            return cls(1)
        if x < 0 and y <= 0:
            return cls(2)
        if x >= 0 and y < 0:
            return cls(3)
        raise ValueError("the zero vector has no quadrant")


QUADRANTS = tuple(QuadrantFrame(q) for q in range(4))


@dataclass
class CandidateSet:
    candidates: list = field(default_factory=list)  # world vectors
    iterations: int = 0
    convergents: list = field(default_factory=list)  # local frame


class EdgeDirection(NamedTuple):
    direction: LatticeVector
    iterations: int
    quadrant: QuadrantFrame


def stage_bound(diameter):
    """Convergent stages allowed per quadrant search: 2 + ceil(log_phi d)."""
    return 2 + max(0, math.ceil(math.log(max(diameter, 1.0), PHI)))


def find_edge_direction_in_quadrant(body, p, frame, max_stages=None):
    """Run the staged convergent search from vertex ``p`` in one quadrant.

    Stage i shoots the ray from p_{i-2} in direction p_{i-1}.  Odd stages
    take the last unit segment of the ray that meets the body, even stages
    the first one.  The search stops when the ray misses the body or a
    stage makes no progress (k = 0).
    """
    if max_stages is None:
        max_stages = stage_bound(body.diameter()) + 4
    px, py = p
    m00, m01, m10, m11 = _ROTATIONS[frame.quadrant]
    lattice_range = body.lattice_range
    out = CandidateSet()
    cands = out.candidates
    ax, ay = 1, 0  # p_{i-2}
    bx, by = 0, 1  # p_{i-1}
    i = 0
    while True:
        if i >= max_stages:
            raise RuntimeError(
                f"edge search from {tuple(p)} in quadrant {frame.name} exceeded "
                f"{max_stages} stages on {body!r}")
        rng = lattice_range(px + m00 * ax + m01 * ay, py + m10 * ax + m11 * ay,
                            m00 * bx + m01 * by, m10 * bx + m11 * by)
        i += 1
        if rng is None or rng[1] < 0:
            break
        # the probe at parameter t lies in the body iff lo <= t <= hi
        lo, hi = rng
        if i & 1:  # stage i-1 is even
            k = lo - 1
            if k <= 0:
                k = 0
                if i == 1 and lo <= 0:
                    # p_{-2} itself may be the edge direction
                    cands.append(LatticeVector(m00 * ax + m01 * ay, m10 * ax + m11 * ay))
            if lo <= k + 1 <= hi:
                nx, ny = ax + (k + 1) * bx, ay + (k + 1) * by
                cands.append(LatticeVector(m00 * nx + m01 * ny, m10 * nx + m11 * ny))
            if k == 0 and i > 1:
                break
        else:
            k = hi
            if k == 0:
                break
            if lo <= k:
                nx, ny = ax + k * bx, ay + k * by
                cands.append(LatticeVector(m00 * nx + m01 * ny, m10 * nx + m11 * ny))
        cx, cy = ax + k * bx, ay + k * by
        out.convergents.append((cx, cy))
        ax, ay, bx, by = bx, by, cx, cy
    out.iterations = i
    return out


def select_clockwise_most(candidates):
    """Candidate with every other candidate counterclockwise of it.

    Assumes the candidates span less than a half-turn, which holds for
    lattice directions leaving a hull vertex.  Collinear ties go to the
    longer vector.
    """
    best = None
    for c in candidates:
        if best is None:
            best = c
            continue
        cr = cross(best, c)
        if cr < 0:
            best = c
        elif cr == 0 and c[0] * best[0] + c[1] * best[1] > 0 \
                and abs(c[0]) + abs(c[1]) > abs(best[0]) + abs(best[1]):
            best = c
    return best


def find_edge_direction(body, p, hint=None, max_stages=None):
    """Primitive direction of the hull edge leaving vertex ``p``.

    With a hint (the quadrant of the previous edge) quadrants are searched
    counterclockwise from it and the first one producing candidates wins.
    Without a hint all four quadrants are searched.  Returns None when no
    other lattice point of the body exists.
    """
    if max_stages is None:
        max_stages = stage_bound(body.diameter()) + 4
    if hint is not None:
        q = hint.quadrant
        for j in range(4):
            frame = QUADRANTS[(q + j) % 4]
            cs = find_edge_direction_in_quadrant(body, p, frame, max_stages)
            if cs.candidates:
                best = select_clockwise_most(cs.candidates)
                return EdgeDirection(reduce(best), cs.iterations, frame)
        return None
    found = []
    for frame in QUADRANTS:
        cs = find_edge_direction_in_quadrant(body, p, frame, max_stages)
        found.extend((c, frame, cs.iterations) for c in cs.candidates)
    if not found:
        return None
    best = select_clockwise_most([c for c, _, _ in found])
    for c, frame, its in found:
        if c == best:
            return EdgeDirection(reduce(best), its, frame)
