from enum import IntEnum
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
from pydantic import PrivateAttr, root_validator

from ..errors import GraphError
from ..helpers import mask_of
from ..models.datamodel import DataModel


class LabelKind(IntEnum):
    ATOM = 0
    CARTESIAN_PAIR = 1
    CORONA_CENTER = 2
    CORONA_SATELLITE = 3
    JOIN_LEFT = 4
    JOIN_RIGHT = 5


class ProductKind(IntEnum):
    CARTESIAN = 1
    CORONA = 2
    JOIN = 3


class VertexLabel(DataModel):
    """Structured label of a vertex

    For atoms indices holds the vertex id itself, for product vertices the
    factor vertex ids, (g, h) for a Cartesian pair and (i, h) for the
    satellite of copy H^i in a corona.
    """

    kind: LabelKind = LabelKind.ATOM
    indices: Tuple[int, ...] = ()
    text: str

    class Config:
        allow_mutation = False

    def __str__(self) -> str:
        return self.text


# product labels are vertex labels of a product kind
ProductLabel = VertexLabel


class ProductInfo(DataModel):
    kind: ProductKind
    left_order: int
    right_order: int

    class Config:
        allow_mutation = False


class Graph(DataModel):
    """Finite simple undirected graph on the vertex ids 0..order-1

    Attributes:
        order (int): number of vertices
        adjacency (List[List[int]]): sorted neighbor list per vertex
        labels (Optional[List[VertexLabel]]): one structured label per vertex
        symmetry_hints (List[List[int]]): vertex permutations that are automorphisms
        name (str): the graph expression that builds this graph
        product (Optional[ProductInfo]): factor information for product graphs
    """

    order: int
    adjacency: List[List[int]]
    labels: Optional[List[VertexLabel]] = None
    symmetry_hints: List[List[int]] = []
    name: str = ""
    product: Optional[ProductInfo] = None

    _neighbor_masks: Optional[List[int]] = PrivateAttr(default=None)
    _label_index: Optional[Dict[str, int]] = PrivateAttr(default=None)
    _nx_graph: Optional[nx.Graph] = PrivateAttr(default=None)

    class Config:
        allow_mutation = False

    @root_validator(skip_on_failure=True)
    def check_structure(cls, values):
        order, adjacency = values["order"], values["adjacency"]
        if order < 0:
            raise ValueError(f"Invalid order {order}")
        if len(adjacency) != order:
            raise ValueError(
                f"Got {len(adjacency)} neighbor list(s) for a graph of order {order}"
            )
        neighbor_sets = []
        for v, neighbors in enumerate(adjacency):
            for w in neighbors:
                if w < 0 or w >= order:
                    raise ValueError(f"Edge {v}-{w} refers to a non existing vertex")
                if w == v:
                    raise ValueError(f"Loop at vertex {v}")
            neighbor_sets.append(set(neighbors))
        for v, neighbors in enumerate(neighbor_sets):
            for w in neighbors:
                if v not in neighbor_sets[w]:
                    raise ValueError(f"Edge {v}-{w} is not symmetric")
        values["adjacency"] = [sorted(s) for s in neighbor_sets]

        labels = values.get("labels")
        if labels is not None:
            if len(labels) != order:
                raise ValueError(f"Got {len(labels)} label(s) for {order} vertices")
            if len(set(l.text for l in labels)) != order:
                raise ValueError("Vertex labels are not distinct")

        for hint in values.get("symmetry_hints", []):
            if sorted(hint) != list(range(order)):
                raise ValueError(f"Symmetry hint {hint} is not a permutation")
            for v, neighbors in enumerate(neighbor_sets):
                for w in neighbors:
                    if hint[w] not in neighbor_sets[hint[v]]:
                        raise ValueError(
                            f"Symmetry hint {hint} maps edge {v}-{w} to a non edge"
                        )
        return values

    @classmethod
    def from_edges(
        cls,
        order: int,
        edges: Iterable[Tuple[int, int]],
        labels: Optional[List[VertexLabel]] = None,
        symmetry_hints: List[List[int]] = [],
        name: str = "",
        product: Optional[ProductInfo] = None,
    ) -> "Graph":
        """Create a graph from an edge list

        Args:
            order (int): number of vertices
            edges (Iterable[Tuple[int, int]]): the edges, duplicates are ignored

        Raises:
            GraphError: if the edges do not describe a simple graph

        Returns:
            Graph: the graph
        """
        adjacency = [set() for _ in range(order)]
        for u, v in edges:
            if not (0 <= u < order and 0 <= v < order):
                raise GraphError(f"Edge {u}-{v} refers to a non existing vertex")
            if u == v:
                raise GraphError(f"Loop at vertex {u}")
            adjacency[u].add(v)
            adjacency[v].add(u)
        try:
            return cls(
                order=order,
                adjacency=[sorted(a) for a in adjacency],
                labels=labels,
                symmetry_hints=symmetry_hints,
                name=name,
                product=product,
            )
        except ValueError as e:
            raise GraphError(f"Invalid graph, got error '{e}'")

    @classmethod
    def from_networkx(cls, nx_graph: nx.Graph, **kwargs) -> "Graph":
        """Create a graph from a networkx graph on the nodes 0..n-1

        Keyword arguments (labels, symmetry_hints, name, product) are passed
        on to from_edges.
        """
        order = nx_graph.number_of_nodes()
        if sorted(nx_graph.nodes) != list(range(order)):
            raise GraphError(f"Expected the nodes 0..{order - 1}")
        return cls.from_edges(order, nx_graph.edges, **kwargs)

    @property
    def neighbor_masks(self) -> List[int]:
        if self._neighbor_masks is None:
            masks = []
            for neighbors in self.adjacency:
                mask = 0
                for w in neighbors:
                    mask |= 1 << w
                masks.append(mask)
            self._neighbor_masks = masks
        return self._neighbor_masks

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def neighbors(self, v: int) -> List[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (self.neighbor_masks[u] >> v) & 1 == 1

    def edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u in range(self.order) for v in self.adjacency[u] if u < v]

    def same_structure(self, other: "Graph") -> bool:
        """True if both graphs have the same vertex ids and edges"""
        return self.order == other.order and self.adjacency == other.adjacency

    def label(self, v: int) -> str:
        """Display text of vertex v"""
        if self.labels is None:
            return str(v)
        return self.labels[v].text

    def label_texts(self, vertices: Optional[Sequence[int]] = None) -> List[str]:
        if vertices is None:
            vertices = range(self.order)
        return [self.label(v) for v in vertices]

    def vertex(self, *parts) -> int:
        """Find a vertex by its label

        A single part is matched against the label text, several parts are
        matched as a tuple, so g.vertex(2, 1) finds the vertex labelled "(2,1)".

        Raises:
            GraphError: if no vertex carries the label

        Returns:
            int: the vertex id
        """
        if self._label_index is None:
            self._label_index = {self.label(v): v for v in range(self.order)}
        if len(parts) == 1:
            key = str(parts[0])
        else:
            key = "(" + ",".join(str(p) for p in parts) + ")"
        if key not in self._label_index:
            raise GraphError(f"No vertex with label '{key}' in {self.name}")
        return self._label_index[key]

    def vertices(self, *labels) -> List[int]:
        """Find several vertices by label, tuples are treated as label parts"""
        return [
            self.vertex(*l) if isinstance(l, tuple) else self.vertex(l) for l in labels
        ]

    def to_networkx(self) -> nx.Graph:
        """The graph as a frozen networkx graph on the vertex ids"""
        if self._nx_graph is None:
            result = nx.Graph()
            result.add_nodes_from(range(self.order))
            result.add_edges_from(self.edges())
            self._nx_graph = nx.freeze(result)
        return self._nx_graph

    def component_masks(self) -> List[int]:
        """Vertex sets of the connected components, ordered by smallest vertex"""
        masks = [mask_of(c) for c in nx.connected_components(self.to_networkx())]
        return sorted(masks, key=lambda m: m & -m)

    def is_connected(self) -> bool:
        return self.order > 0 and nx.is_connected(self.to_networkx())
