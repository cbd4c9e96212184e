import threading
from enum import Enum
from typing import List, Optional, Union

import networkx as nx
import numpy as np
from pydantic import BaseModel, PrivateAttr

from ..models.datamodel import DataModel
from .graph import Graph


class Unreachable(Enum):
    """Distance between vertices in different components"""

    INFINITE = "inf"

    def __str__(self) -> str:
        return "inf"


INFINITE = Unreachable.INFINITE

Distance = Union[int, Unreachable]


class GridPoint(DataModel):
    """Vertex (x, y) of the two-way infinite grid"""

    x: int
    y: int

    class Config:
        frozen = True

    def __add__(self, other: "GridPoint") -> "GridPoint":
        return GridPoint(x=self.x + other.x, y=self.y + other.y)

    def __sub__(self, other: "GridPoint") -> "GridPoint":
        return GridPoint(x=self.x - other.x, y=self.y - other.y)


def infinite_grid_distance(p: GridPoint, q: GridPoint) -> int:
    """Shortest path length in the infinite grid, the L1 distance"""
    return abs(p.x - q.x) + abs(p.y - q.y)


def _rows_to_masks(matrix: np.ndarray) -> List[int]:
    packed = np.packbits(matrix, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


class DistanceOracle(BaseModel):
    """All pairs hop distances

    Attributes:
        order (int): number of vertices
        table (np.ndarray): order x order distances, -1 for unreachable pairs
        reachable (np.ndarray): order x order boolean mask of finite distances
    """

    order: int
    table: np.ndarray
    reachable: np.ndarray

    _intervals: Optional[List[List[int]]] = PrivateAttr(default=None)
    _shadows: Optional[List[List[int]]] = PrivateAttr(default=None)
    _lock: threading.Lock = PrivateAttr(default_factory=threading.Lock)

    class Config:
        arbitrary_types_allowed = True
        allow_mutation = False

    def distance(self, u: int, v: int) -> Distance:
        if not self.reachable[u, v]:
            return INFINITE
        return int(self.table[u, v])

    def is_finite(self, u: int, v: int) -> bool:
        return bool(self.reachable[u, v])

    def eccentricity(self, v: int) -> Distance:
        if not self.reachable[v].all():
            return INFINITE
        return int(self.table[v].max())

    @property
    def max_finite_distance(self) -> int:
        if self.order == 0:
            return 0
        return int(self.table[self.reachable].max())

    def _build_betweenness(self):
        n = self.order
        intervals = []
        shadows: List[List[int]] = [[0] * n for _ in range(n)]
        off_diagonal = ~np.eye(n, dtype=bool)
        for u in range(n):
            du = self.table[u]
            ru = self.reachable[u]
            # between[w, v]: w lies on a shortest u,v-path, endpoints excluded
            between = (
                (du[:, None] + self.table == du[None, :])
                & ru[:, None]
                & self.reachable
                & ru[None, :]
                & off_diagonal
            )
            between[u, :] = False
            between[:, u] = False
            intervals.append(_rows_to_masks(between.T))
            for w, mask in enumerate(_rows_to_masks(between)):
                shadows[w][u] = mask
        self._intervals = intervals
        self._shadows = shadows

    @property
    def intervals(self) -> List[List[int]]:
        """intervals[u][v] is the bitmask of vertices strictly inside a shortest u,v-path"""
        with self._lock:
            if self._intervals is None:
                self._build_betweenness()
        return self._intervals

    @property
    def shadows(self) -> List[List[int]]:
        """shadows[w][u] is the bitmask of vertices v such that w lies strictly inside a shortest u,v-path"""
        with self._lock:
            if self._shadows is None:
                self._build_betweenness()
        return self._shadows


def all_pairs_distances(g: Graph) -> DistanceOracle:
    """Breadth first search distances from every vertex

    Args:
        g (Graph): the graph

    Returns:
        DistanceOracle: the distances, unreachable pairs are marked
    """
    n = g.order
    table = np.full((n, n), -1, dtype=np.int64)
    for source, lengths in nx.all_pairs_shortest_path_length(g.to_networkx()):
        for target, length in lengths.items():
            table[source, target] = length
    return DistanceOracle(order=n, table=table, reachable=table >= 0)
