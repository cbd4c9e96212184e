"""
Bookkeeping of a schedule under construction
"""
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from ..errors import MobilityError
from ..graphs.distance import DistanceOracle, all_pairs_distances
from ..graphs.graph import Graph
from ..helpers import bits_of, mask_of
from ..mobility.configuration import Schedule
from ..position.geodesics import GeodesicIndex


class MoveRecorder:
    """Occupied vertices, coverage and the move list of a schedule being built

    Only occupancy is checked here, legality is left to the verifier, except
    for tours which only take legal steps.
    """

    def __init__(self, g: Graph, initial: Iterable[int], d: Optional[DistanceOracle] = None):
        self.graph = g
        self.initial = sorted(initial)
        self.occupied = mask_of(self.initial)
        self.covered = self.occupied
        self.moves: List[Tuple[int, int]] = []
        self._index: Optional[GeodesicIndex] = None
        self._oracle = d

    @property
    def index(self) -> GeodesicIndex:
        if self._index is None:
            if self._oracle is None:
                self._oracle = all_pairs_distances(self.graph)
            self._index = GeodesicIndex(self._oracle)
        return self._index

    def is_occupied(self, v: int) -> bool:
        return (self.occupied >> v) & 1 == 1

    def is_covered(self, v: int) -> bool:
        return (self.covered >> v) & 1 == 1

    @property
    def complete(self) -> bool:
        return self.covered == self.graph.full_mask

    def move(self, source: int, target: int):
        if not self.is_occupied(source):
            raise MobilityError(f"No robot on vertex {self.graph.label(source)}")
        if self.is_occupied(target):
            raise MobilityError(f"Vertex {self.graph.label(target)} is occupied")
        self.occupied = (self.occupied & ~(1 << source)) | (1 << target)
        self.covered |= 1 << target
        self.moves.append((source, target))

    def walk(self, path: Sequence[int]):
        """Move the robot on path[0] along the path"""
        for a, b in zip(path, path[1:]):
            self.move(a, b)

    def replay(self, moves: Iterable[Tuple[int, int]], mapping: Dict[int, int]):
        for a, b in moves:
            self.move(mapping[a], mapping[b])

    def tour(self, start: int, allowed: Optional[int] = None) -> int:
        """Depth first out-and-back tour of the robot on start

        The other robots stay put. Steps go to free vertices in allowed (all
        vertices if None) that keep the robots in general position, neighbors
        in ascending id order. The robot ends on start again.

        Returns:
            int: the vertices visited by the tour as a bitmask
        """
        if not self.is_occupied(start):
            raise MobilityError(f"No robot on vertex {self.graph.label(start)}")
        if allowed is None:
            allowed = self.graph.full_mask
        others = self.occupied & ~(1 << start)
        visited = 1 << start
        stack = [(start, iter(self.graph.adjacency[start]))]
        while stack:
            v, neighbors = stack[-1]
            for w in neighbors:
                if not (allowed >> w) & 1 or (visited >> w) & 1:
                    continue
                if self.index.can_extend(others, w):
                    visited |= 1 << w
                    self.move(v, w)
                    stack.append((w, iter(self.graph.adjacency[w])))
                    break
            else:
                stack.pop()
                if stack:
                    self.move(v, stack[-1][0])
        return visited

    def schedule(self) -> Schedule:
        return Schedule(
            graph=self.graph.name,
            initial=self.initial,
            moves=list(self.moves),
            labels=self.graph.label_texts() if self.graph.labels is not None else None,
        )


def shortest_path(g: Graph, source: int, target: int, allowed: Optional[int] = None) -> List[int]:
    """Shortest path from source to target using only the vertices in allowed

    Raises:
        MobilityError: if target cannot be reached
    """
    nx_graph = g.to_networkx()
    if allowed is not None:
        nx_graph = nx_graph.subgraph(bits_of(allowed | (1 << source)))
    try:
        return nx.shortest_path(nx_graph, source, target)
    except (nx.NetworkXNoPath, nx.NodeNotFound):
        raise MobilityError(f"No path from {g.label(source)} to {g.label(target)}")


def reversed_moves(moves: Sequence[Tuple[int, int]]) -> List[Tuple[int, int]]:
    """The moves that undo a move list"""
    return [(b, a) for a, b in reversed(moves)]
