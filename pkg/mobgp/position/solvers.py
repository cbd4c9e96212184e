"""
Exact gp and gpo solvers

Both search vertex-ascending extensions depth first, so sets are visited in
lexicographic order of their sorted vertex tuples and the first maximum set
found is the lexicographically smallest one.
"""
import logging
import time
from typing import Callable, Iterator, List, Optional, Tuple

from ..errors import PositionError
from ..graphs.distance import DistanceOracle, all_pairs_distances
from ..graphs.graph import Graph
from ..helpers import bits_of
from ..models.datamodel import DataModel
from .geodesics import GeodesicIndex

logger = logging.getLogger(__name__)


class PositionReport(DataModel):
    """Outcome of a gp or gpo search

    Attributes:
        value (int): the maximum size
        witness (List[int]): a set of that size, ascending vertex ids
        explored (int): number of search nodes
        elapsed_ms (float): wall time of the search
    """

    value: int
    witness: List[int]
    explored: int
    elapsed_ms: float = 0.0


def _maximum_set(order: int, refine: Callable[[int, int, int], int]) -> Tuple[int, int]:
    """Depth first search for a maximum set

    Args:
        order (int): number of vertices
        refine (Callable): refine(mask, w, candidates) returns the candidates
            that may still be added after w was added to mask (mask includes w)

    Returns:
        Tuple[int, int]: the best mask and the number of explored nodes
    """
    best = [0, 0]  # size, mask
    explored = [0]

    def dfs(mask: int, size: int, candidates: int):
        explored[0] += 1
        if size > best[0]:
            best[0], best[1] = size, mask
        while candidates:
            # anything found later is lexicographically larger, ties are pruned
            if size + candidates.bit_count() <= best[0]:
                return
            low = candidates & -candidates
            w = low.bit_length() - 1
            candidates ^= low
            new_mask = mask | low
            dfs(new_mask, size + 1, refine(new_mask, w, candidates))

    dfs(0, 0, (1 << order) - 1)
    return best[1], explored[0]


def _gp_refiner(index: GeodesicIndex) -> Callable[[int, int, int], int]:
    def refine(mask: int, w: int, candidates: int) -> int:
        result = 0
        rest = candidates
        while rest:
            low = rest & -rest
            if index.can_extend(mask, low.bit_length() - 1):
                result |= low
            rest ^= low
        return result

    return refine


def gp_number(g: Graph, d: Optional[DistanceOracle] = None) -> PositionReport:
    """Exact general position number

    Args:
        g (Graph): the graph
        d (Optional[DistanceOracle]): precomputed distances

    Returns:
        PositionReport: gp(g) with the lexicographically smallest gp-set
    """
    start = time.monotonic()
    if d is None:
        d = all_pairs_distances(g)
    index = GeodesicIndex(d)
    mask, explored = _maximum_set(g.order, _gp_refiner(index))
    witness = bits_of(mask)
    logger.debug(f"gp({g.name}) = {len(witness)} after {explored} search node(s)")
    return PositionReport(
        value=len(witness),
        witness=witness,
        explored=explored,
        elapsed_ms=(time.monotonic() - start) * 1000.0,
    )


def gpo_number(g: Graph, d: Optional[DistanceOracle] = None) -> PositionReport:
    """Exact outer general position number"""
    start = time.monotonic()
    if d is None:
        d = all_pairs_distances(g)
    compatible = GeodesicIndex(d).outer_compatible

    def refine(mask: int, w: int, candidates: int) -> int:
        return candidates & compatible[w]

    mask, explored = _maximum_set(g.order, refine)
    witness = bits_of(mask)
    return PositionReport(
        value=len(witness),
        witness=witness,
        explored=explored,
        elapsed_ms=(time.monotonic() - start) * 1000.0,
    )


def iter_gp_masks(index: GeodesicIndex, k: int) -> Iterator[int]:
    """Lazily yield the size k general position sets as bitmasks, lexicographic order"""
    refine = _gp_refiner(index)
    stack = [(0, 0, (1 << index.order) - 1)]
    while stack:
        mask, size, candidates = stack.pop()
        if size == k:
            yield mask
            continue
        if size + candidates.bit_count() < k:
            continue
        # push in reverse so the smallest extension is explored first
        children = []
        rest = candidates
        while rest:
            low = rest & -rest
            rest ^= low
            new_mask = mask | low
            children.append((new_mask, size + 1, refine(new_mask, low.bit_length() - 1, rest)))
        stack.extend(reversed(children))


def enumerate_gp_sets(
    g: Graph, k: int, d: Optional[DistanceOracle] = None
) -> Iterator[List[int]]:
    """Yield every general position set of size k exactly once

    Sets come as ascending vertex lists in lexicographic order.
    """
    if k < 1:
        raise PositionError(f"Invalid set size {k}, expected at least 1")
    if d is None:
        d = all_pairs_distances(g)
    for mask in iter_gp_masks(GeodesicIndex(d), k):
        yield bits_of(mask)
