import pytest
from typing import Callable, List

import networkx as nx

from mobgp.dsl.expr import build_graph_expr
from mobgp.graphs.edgelist import format_edge_list, quote
from mobgp.graphs.graph import Graph


def nx_to_graph(nx_graph: nx.Graph) -> Graph:
    """Convert a networkx graph with vertices 0..n-1 into a named graph"""
    edges = sorted((min(u, v), max(u, v)) for u, v in nx_graph.edges())
    text = format_edge_list(nx_graph.number_of_nodes(), edges, separator=";")
    return build_graph_expr(f"graph({quote(text)})")


def graph_to_nx(g: Graph) -> nx.Graph:
    result = nx.Graph()
    result.add_nodes_from(range(g.order))
    result.add_edges_from(g.edges())
    return result


@pytest.fixture
def to_graph() -> Callable[[nx.Graph], Graph]:
    """Get the networkx to mobgp graph converter

    Returns:
        Callable[[nx.Graph], Graph]: the converter
    """
    return nx_to_graph


@pytest.fixture
def to_nx() -> Callable[[Graph], nx.Graph]:
    return graph_to_nx


@pytest.fixture
def atlas_graphs() -> List[Graph]:
    """Get all connected graphs with 1 up to 6 vertices

    Returns:
        List[Graph]: the graphs of the networkx graph atlas, converted
    """
    return [
        nx_to_graph(g)
        for g in nx.graph_atlas_g()[1:]
        if g.number_of_nodes() <= 6 and nx.is_connected(g)
    ]


@pytest.fixture(scope="session")
def atlas_graphs_order_7() -> List[Graph]:
    """Get all connected graphs on 7 vertices

    Returns:
        List[Graph]: the 853 connected 7 vertex graphs of the atlas
    """
    return [
        nx_to_graph(g)
        for g in nx.graph_atlas_g()
        if g.number_of_nodes() == 7 and nx.is_connected(g)
    ]


@pytest.fixture
def random_graphs() -> List[Graph]:
    """Get seeded random connected graphs of order 8 up to 12

    Returns:
        List[Graph]: the graphs
    """
    result = []
    for seed in range(20):
        n = 8 + seed % 5
        g = nx.gnp_random_graph(n, 0.35, seed=seed)
        if nx.is_connected(g):
            result.append(nx_to_graph(g))
    return result


@pytest.fixture(scope="session")
def random_graphs_order_8_9() -> List[Graph]:
    """Get seeded random connected G(n, p) graphs of order 8 and 9

    Returns:
        List[Graph]: the graphs
    """
    result = []
    for seed in range(300):
        g = nx.gnp_random_graph(8 + seed % 2, 0.2 + 0.05 * (seed % 9), seed=seed)
        if nx.is_connected(g):
            result.append(nx_to_graph(g))
    return result


@pytest.fixture
def petersen() -> Graph:
    return build_graph_expr("petersen")
