"""
The configuration graph

Nodes are general position sets of a fixed size, edges are legal moves.
Every legal move can be reversed, so reachability is symmetric and a
configuration is mobile iff the union of the occupied vertices over its
connected component is the whole vertex set.
"""
import time
from collections import deque
from typing import Dict, Iterator, List, Optional, Tuple

from ..errors import SearchTimeout
from ..graphs.distance import DistanceOracle, all_pairs_distances
from ..graphs.graph import Graph
from ..position.geodesics import GeodesicIndex
from ..settings import DEADLINE_POLL_INTERVAL


class ConfigurationSpace:
    """Legal moves between configurations (bitmasks) of one graph

    Immutable after construction, so one instance can be shared by workers.
    """

    def __init__(self, g: Graph, d: Optional[DistanceOracle] = None):
        self.graph = g
        self.oracle = d if d is not None else all_pairs_distances(g)
        self.index = GeodesicIndex(self.oracle)
        self.neighbor_masks = g.neighbor_masks
        self.full = g.full_mask

    def legal_moves(self, occupied: int) -> Iterator[Tuple[int, int, int]]:
        """Yield (source, target, new configuration) for every legal move"""
        rest = occupied
        while rest:
            low = rest & -rest
            rest ^= low
            source = low.bit_length() - 1
            remaining = occupied ^ low
            free = self.neighbor_masks[source] & ~occupied
            while free:
                flow = free & -free
                free ^= flow
                target = flow.bit_length() - 1
                if self.index.can_extend(remaining, target):
                    yield source, target, remaining | flow

    def explore(
        self,
        start: int,
        deadline: Optional[float] = None,
        stop_when_covered: bool = False,
    ) -> Tuple[Dict[int, Optional[int]], int]:
        """Breadth first search over the component of start

        Args:
            start (int): a general position configuration
            deadline (Optional[float]): time.monotonic() value after which
                SearchTimeout is raised
            stop_when_covered (bool): stop as soon as every vertex is covered

        Raises:
            SearchTimeout: when the deadline passes

        Returns:
            Tuple[Dict[int, Optional[int]], int]: every reached configuration
            mapped to its BFS parent (None for start), and the covered vertices
        """
        parents: Dict[int, Optional[int]] = {start: None}
        covered = start
        queue = deque([start])
        expanded = 0
        while queue:
            if stop_when_covered and covered == self.full:
                break
            current = queue.popleft()
            expanded += 1
            if deadline is not None and expanded % DEADLINE_POLL_INTERVAL == 0:
                if time.monotonic() > deadline:
                    raise SearchTimeout(f"Deadline passed after {len(parents)} configuration(s)")
            for _, _, nxt in self.legal_moves(current):
                if nxt not in parents:
                    parents[nxt] = current
                    covered |= nxt
                    queue.append(nxt)
        return parents, covered


def path_to(parents: Dict[int, Optional[int]], target: int) -> List[int]:
    """Configurations from the BFS root to target"""
    path = [target]
    while parents[path[-1]] is not None:
        path.append(parents[path[-1]])
    return list(reversed(path))


def move_between(a: int, b: int) -> Tuple[int, int]:
    """The single move turning configuration a into configuration b"""
    source = a & ~b
    target = b & ~a
    return source.bit_length() - 1, target.bit_length() - 1
