import math
from typing import Iterable, List, Optional

import networkx as nx

from ..errors import GraphError
from ..helpers import bits_of, mask_of
from .distance import INFINITE, Distance, DistanceOracle, all_pairs_distances
from .graph import Graph


def leaf_count(g: Graph) -> int:
    """Number of vertices of degree one"""
    return sum(1 for v in range(g.order) if g.degree(v) == 1)


def _color_classes(nx_graph: nx.Graph, candidates: int):
    """Greedy coloring of the candidates, returns (vertex, color) in color order

    Colors start at 1, the members of color classes 1..c hold no clique
    larger than c.
    """
    coloring = nx.coloring.greedy_color(
        nx_graph.subgraph(bits_of(candidates)), strategy="largest_first"
    )
    return sorted(((v, color + 1) for v, color in coloring.items()), key=lambda p: (p[1], p[0]))


def max_clique(g: Graph) -> List[int]:
    """Maximum clique by branch and bound with a greedy coloring bound

    Args:
        g (Graph): the graph

    Returns:
        List[int]: the vertices of a maximum clique in ascending order
    """
    if g.order == 0:
        return []
    neighbor_masks = g.neighbor_masks
    nx_graph = g.to_networkx()
    best = [1, 1]  # size, mask

    def expand(clique: int, size: int, candidates: int):
        coloring = _color_classes(nx_graph, candidates)
        for v, color in reversed(coloring):
            if size + color <= best[0]:
                return
            new_candidates = candidates & neighbor_masks[v]
            if new_candidates:
                expand(clique | (1 << v), size + 1, new_candidates)
            elif size + 1 > best[0]:
                best[0] = size + 1
                best[1] = clique | (1 << v)
            candidates &= ~(1 << v)

    expand(0, 0, g.full_mask)
    return bits_of(best[1])


def clique_number(g: Graph) -> int:
    if g.order < 1:
        raise GraphError("The clique number needs at least one vertex")
    return len(max_clique(g))


def girth(g: Graph) -> Distance:
    """Length of a shortest cycle, INFINITE for forests"""
    length = nx.girth(g.to_networkx())
    return INFINITE if math.isinf(length) else int(length)


def radius(g: Graph, d: Optional[DistanceOracle] = None) -> int:
    """Minimum eccentricity

    Raises:
        GraphError: if the graph is disconnected
    """
    if not g.is_connected():
        raise GraphError(f"The radius of the disconnected graph {g.name} is undefined")
    if d is None:
        d = all_pairs_distances(g)
    return min(d.eccentricity(v) for v in range(g.order))


def diameter(g: Graph, d: Optional[DistanceOracle] = None) -> Distance:
    if d is None:
        d = all_pairs_distances(g)
    if not d.reachable.all():
        return INFINITE
    return d.max_finite_distance


def is_convex_subset(g: Graph, d: DistanceOracle, s: Iterable[int]) -> bool:
    """True if every shortest path between members of s stays inside s"""
    members = sorted(set(s))
    inside = mask_of(members)
    intervals = d.intervals
    for i, u in enumerate(members):
        for v in members[i + 1 :]:
            if intervals[u][v] & ~inside:
                return False
    return True
