"""
Geodesic betweenness and (outer) general position predicates

Vertex sets are handled as bitmasks internally. The interval and shadow
bitsets cached on the DistanceOracle are derived from the distance table
only.
"""
from typing import Iterable, List

from ..errors import PositionError
from ..graphs.distance import DistanceOracle
from ..graphs.graph import Graph
from ..helpers import bits_of, mask_of


def lies_on_geodesic(d: DistanceOracle, u: int, w: int, v: int) -> bool:
    """True if w lies on a shortest u,v-path

    Pairs in different components have no shortest path, so the result is
    False whenever one of the three distances is infinite.
    """
    if not (d.is_finite(u, w) and d.is_finite(w, v) and d.is_finite(u, v)):
        return False
    return d.distance(u, w) + d.distance(w, v) == d.distance(u, v)


class GeodesicIndex:
    """Bitset betweenness tests on top of a distance oracle

    interval[u][v] holds the vertices strictly inside a shortest u,v-path,
    shadow[w][u] the vertices v for which w is strictly inside a shortest
    u,v-path.
    """

    def __init__(self, d: DistanceOracle):
        self.order = d.order
        self.interval = d.intervals
        self.shadow = d.shadows
        self._outer_compatible = None

    def can_extend(self, mask: int, w: int) -> bool:
        """True if mask + {w} is in general position, assuming mask is"""
        if (mask >> w) & 1:
            return False
        interval_w = self.interval[w]
        shadow_w = self.shadow[w]
        rest = mask
        while rest:
            low = rest & -rest
            u = low.bit_length() - 1
            if interval_w[u] & mask or shadow_w[u] & mask:
                return False
            rest ^= low
        return True

    def is_general_position(self, mask: int) -> bool:
        built = 0
        rest = mask
        while rest:
            low = rest & -rest
            if not self.can_extend(built, low.bit_length() - 1):
                return False
            built |= low
            rest ^= low
        return True

    def extensions(self, mask: int) -> int:
        """Bitmask of the vertices that can be added to mask"""
        result = 0
        for w in range(self.order):
            if self.can_extend(mask, w):
                result |= 1 << w
        return result

    @property
    def outer_compatible(self) -> List[int]:
        """outer_compatible[a] holds the b != a such that {a, b} is an outer general position set

        A set is outer general position iff its members are pairwise compatible.
        """
        if self._outer_compatible is None:
            n = self.order
            result = [0] * n
            for a in range(n):
                for b in range(n):
                    if a != b and self.shadow[a][b] == 0 and self.shadow[b][a] == 0:
                        result[a] |= 1 << b
            self._outer_compatible = result
        return self._outer_compatible


def is_general_position(d: DistanceOracle, s: Iterable[int]) -> bool:
    """True if no three members of s lie on a common shortest path"""
    return GeodesicIndex(d).is_general_position(mask_of(s))


def is_x_positionable(d: DistanceOracle, x: Iterable[int], u: int, v: int) -> bool:
    """True if no member of x other than u and v lies on a shortest u,v-path"""
    inner = mask_of(x) & ~(1 << u) & ~(1 << v)
    if u == v:
        return True
    return d.intervals[u][v] & inner == 0


def is_outer_general_position(d: DistanceOracle, x: Iterable[int]) -> bool:
    """True if x is in general position and every pair (u in x, v anywhere) is x-positionable"""
    members = bits_of(mask_of(x))
    shadows = d.shadows
    for a in members:
        for b in members:
            # a must not lie between b and any vertex
            if a != b and shadows[a][b] != 0:
                return False
    return True


def is_mmd_pair(g: Graph, d: DistanceOracle, u: int, v: int) -> bool:
    """True if u and v are mutually maximally distant

    Raises:
        PositionError: if u == v or u and v lie in different components
    """
    if u == v:
        raise PositionError("A maximally distant pair needs two distinct vertices")
    if not d.is_finite(u, v):
        raise PositionError(f"Vertices {u} and {v} lie in different components")
    duv = d.distance(u, v)
    if any(d.distance(w, v) > duv for w in g.neighbors(u)):
        return False
    if any(d.distance(u, w) > duv for w in g.neighbors(v)):
        return False
    return True


def is_maximal_gp(d: DistanceOracle, s: Iterable[int]) -> bool:
    """True if no single vertex can be added to the general position set s

    Raises:
        PositionError: if s is not in general position
    """
    index = GeodesicIndex(d)
    mask = mask_of(s)
    if not index.is_general_position(mask):
        raise PositionError("The input set is not in general position")
    return index.extensions(mask) == 0
