"""Discrete hulls of convex bodies via continued-fraction edge search."""

from .baseline import naive_hull
from .cfrac import Convergent, convergents, geom_gcd
from .edgedir import (CandidateSet, QuadrantFrame, find_edge_direction,
                      find_edge_direction_in_quadrant, select_clockwise_most)
from .hull import (HullChain, discrete_hull, discrete_hull_from,
                   find_hull_vertex_general, find_lowest_vertex)
from .lattice import LatticePoint, LatticeVector, edge_weight, gcd, orientation, reduce
from .oracle import (ClippedBody, ConvexBody, DiskBody, PolygonBody,
                     TrapezoidUnionBody, parse_shape, chord, contains,
                     last_inside, max_seg_index, min_seg_index)

__version__ = "0.1.0"
