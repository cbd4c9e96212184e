"""
Named graph families

Vertex numbering per family (ids are always 0-based, labels follow the
usual mathematical numbering):

* path(n): ids 0..n-1 along the path, labels 1..n
* cycle(n): ids and labels 0..n-1 around the cycle
* complete(n): ids 0..n-1, labels 1..n
* complete_bipartite(a, b): ids and labels 0..a-1 in the first part, a..a+b-1 in the second
* star(k): center 0, leaves 1..k (ids equal labels)
* empty(n): ids and labels 0..n-1
* petersen: outer cycle 0..4, spokes i-(i+5), inner edges (5+i)-(5+(i+2) mod 5)
* complete_minus_edge(n): K_n minus the edge x1-x2; ids 0 (x1), 1 (x2), 2..n-1 (labels 3..n)
* complete_plus_leaf(n): K_n on ids 0..n-1 (labels 1..n) plus the leaf x (id n) on vertex 0
* birdcage(n): clique u1..un (ids 0..n-1), independent v1..vn (ids n..2n-1), hub z (id 2n);
  edges ui-vi and vi-z
* graph("edge list"), tree("edge list"): vertex ids from the edge list
"""
from typing import Callable, Dict, List, Optional, Tuple

import networkx as nx
from pydantic import BaseModel

from ..errors import GraphError
from .edgelist import parse_edge_list, quote
from .graph import Graph, VertexLabel

EDGE_LIST_FAMILIES = ("graph", "tree")


class FamilyInfo(BaseModel):
    """Arity and parameter minimums of a family"""

    name: str
    minimums: Tuple[int, ...]
    builder: Callable

    def validate_params(self, params: List[int]) -> Optional[Tuple[int, str]]:
        """Check the parameters

        Returns:
            Optional[Tuple[int, str]]: None if valid, else the index of the
            offending parameter (-1 for an arity mismatch) and a message
        """
        if len(params) != len(self.minimums):
            return (
                -1,
                f"family '{self.name}' takes {len(self.minimums)} parameter(s), got {len(params)}",
            )
        for i, (p, minimum) in enumerate(zip(params, self.minimums)):
            if p < minimum:
                return i, f"parameter {p} of '{self.name}' is out of range (minimum {minimum})"
        return None


def _labels(texts: List) -> List[VertexLabel]:
    return [VertexLabel(indices=(i,), text=str(t)) for i, t in enumerate(texts)]


def _transposition(order: int, a: int, b: int) -> List[int]:
    perm = list(range(order))
    perm[a], perm[b] = b, a
    return perm


def _adjacent_transpositions(order: int, vertices: List[int]) -> List[List[int]]:
    return [_transposition(order, a, b) for a, b in zip(vertices, vertices[1:])]


def _name(family: str, params: List[int]) -> str:
    if len(params) == 0:
        return family
    return f"{family}({','.join(str(p) for p in params)})"


def path(n: int) -> Graph:
    return Graph.from_networkx(
        nx.path_graph(n),
        labels=_labels(list(range(1, n + 1))),
        symmetry_hints=[[n - 1 - i for i in range(n)]] if n > 1 else [],
        name=_name("path", [n]),
    )


def cycle(n: int) -> Graph:
    return Graph.from_networkx(
        nx.cycle_graph(n),
        labels=_labels(list(range(n))),
        symmetry_hints=[[(i + 1) % n for i in range(n)], [(-i) % n for i in range(n)]],
        name=_name("cycle", [n]),
    )


def complete(n: int) -> Graph:
    return Graph.from_networkx(
        nx.complete_graph(n),
        labels=_labels(list(range(1, n + 1))),
        symmetry_hints=_adjacent_transpositions(n, list(range(n))),
        name=_name("complete", [n]),
    )


def complete_bipartite(a: int, b: int) -> Graph:
    n = a + b
    return Graph.from_networkx(
        nx.complete_bipartite_graph(a, b),
        labels=_labels(list(range(n))),
        symmetry_hints=_adjacent_transpositions(n, list(range(a)))
        + _adjacent_transpositions(n, list(range(a, n))),
        name=_name("complete_bipartite", [a, b]),
    )


def star(k: int) -> Graph:
    n = k + 1
    return Graph.from_networkx(
        nx.star_graph(k),
        labels=_labels(list(range(n))),
        symmetry_hints=_adjacent_transpositions(n, list(range(1, n))),
        name=_name("star", [k]),
    )


def empty(n: int) -> Graph:
    return Graph.from_networkx(
        nx.empty_graph(n),
        labels=_labels(list(range(n))),
        symmetry_hints=_adjacent_transpositions(n, list(range(n))),
        name=_name("empty", [n]),
    )


def petersen() -> Graph:
    rotation = [(i + 1) % 5 for i in range(5)] + [5 + (i + 1) % 5 for i in range(5)]
    return Graph.from_networkx(
        nx.petersen_graph(),
        labels=_labels(list(range(10))),
        symmetry_hints=[rotation],
        name="petersen",
    )


def complete_minus_edge(n: int) -> Graph:
    g = nx.complete_graph(n)
    g.remove_edge(0, 1)
    return Graph.from_networkx(
        g,
        labels=_labels(["x1", "x2"] + list(range(3, n + 1))),
        symmetry_hints=[_transposition(n, 0, 1)]
        + _adjacent_transpositions(n, list(range(2, n))),
        name=_name("complete_minus_edge", [n]),
    )


def complete_plus_leaf(n: int) -> Graph:
    g = nx.complete_graph(n)
    g.add_edge(0, n)
    return Graph.from_networkx(
        g,
        labels=_labels(list(range(1, n + 1)) + ["x"]),
        symmetry_hints=_adjacent_transpositions(n + 1, list(range(1, n))),
        name=_name("complete_plus_leaf", [n]),
    )


def birdcage(n: int) -> Graph:
    z = 2 * n
    g = nx.complete_graph(n)
    g.add_edges_from((i, n + i) for i in range(n))
    g.add_edges_from((n + i, z) for i in range(n))
    hints = []
    for i in range(n - 1):
        perm = _transposition(2 * n + 1, i, i + 1)
        perm[n + i], perm[n + i + 1] = n + i + 1, n + i
        hints.append(perm)
    return Graph.from_networkx(
        g,
        labels=_labels(
            [f"u{i}" for i in range(1, n + 1)] + [f"v{i}" for i in range(1, n + 1)] + ["z"]
        ),
        symmetry_hints=hints,
        name=_name("birdcage", [n]),
    )


FAMILIES: Dict[str, FamilyInfo] = {
    info.name: info
    for info in [
        FamilyInfo(name="path", minimums=(1,), builder=path),
        FamilyInfo(name="cycle", minimums=(3,), builder=cycle),
        FamilyInfo(name="complete", minimums=(1,), builder=complete),
        FamilyInfo(name="complete_bipartite", minimums=(1, 1), builder=complete_bipartite),
        FamilyInfo(name="star", minimums=(1,), builder=star),
        FamilyInfo(name="empty", minimums=(1,), builder=empty),
        FamilyInfo(name="petersen", minimums=(), builder=petersen),
        FamilyInfo(name="complete_minus_edge", minimums=(2,), builder=complete_minus_edge),
        FamilyInfo(name="complete_plus_leaf", minimums=(1,), builder=complete_plus_leaf),
        FamilyInfo(name="birdcage", minimums=(2,), builder=birdcage),
    ]
}


def graph_from_edge_list(family: str, text: str) -> Graph:
    """Build a graph or tree from edge list text

    Args:
        family (str): 'graph' or 'tree', trees are checked to be connected and acyclic
        text (str): the edge list

    Raises:
        GraphError: on a malformed edge list or a tree that is not a tree

    Returns:
        Graph: the graph without labels or symmetry hints
    """
    if family not in EDGE_LIST_FAMILIES:
        raise GraphError(f"Unknown edge list family '{family}'")
    order, edges = parse_edge_list(text)
    g = Graph.from_edges(order, edges, name=f"{family}({quote(text)})")
    if family == "tree":
        if len(edges) != order - 1 or not g.is_connected():
            raise GraphError("The edge list does not describe a tree")
    return g


def build_graph(family: str, params: List[int] = [], edges: Optional[str] = None) -> Graph:
    """Build a graph from a named family

    Args:
        family (str): family name, see FAMILIES, or 'graph' / 'tree'
        params (List[int]): the family parameters
        edges (Optional[str]): edge list text for 'graph' and 'tree'

    Raises:
        GraphError: unknown family, out of range parameter or malformed edge list

    Returns:
        Graph: the graph with its documented numbering and symmetry hints
    """
    if family in EDGE_LIST_FAMILIES:
        if edges is None:
            raise GraphError(f"Family '{family}' needs an edge list")
        return graph_from_edge_list(family, edges)

    if family not in FAMILIES:
        raise GraphError(f"Unknown graph family '{family}'")
    info = FAMILIES[family]
    problem = info.validate_params(params)
    if problem is not None:
        raise GraphError(problem[1])
    return info.builder(*params)
