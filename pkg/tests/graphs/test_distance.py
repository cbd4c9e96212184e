import networkx as nx
import numpy as np

from mobgp.dsl.expr import build_graph_expr
from mobgp.graphs.distance import (
    INFINITE,
    GridPoint,
    all_pairs_distances,
    infinite_grid_distance,
)
from mobgp.graphs.graph import Graph


class TestDistanceOracle:
    def test_path(self):
        d = all_pairs_distances(build_graph_expr("path(5)"))
        assert d.distance(0, 4) == 4
        assert d.eccentricity(2) == 2
        assert d.max_finite_distance == 4

    def test_unreachable(self):
        d = all_pairs_distances(Graph.from_edges(4, [(0, 1), (2, 3)]))
        assert d.distance(0, 2) == INFINITE
        assert not d.is_finite(1, 3)
        assert d.eccentricity(0) == INFINITE
        assert str(INFINITE) == "inf"
        assert d.max_finite_distance == 1

    def test_product_distance(self):
        g = build_graph_expr("cartesian(path(5),path(5))")
        d = all_pairs_distances(g)
        assert d.distance(g.vertex(1, 1), g.vertex(3, 4)) == 5

    def test_agrees_with_floyd_warshall(self, atlas_graphs, to_nx):
        for g in atlas_graphs:
            expected = nx.floyd_warshall_numpy(to_nx(g), nodelist=list(range(g.order)))
            d = all_pairs_distances(g)
            assert np.array_equal(d.table, expected.astype(np.int64)), g.name

    def test_disconnected_agrees_with_networkx(self, to_nx):
        g = Graph.from_edges(6, [(0, 1), (1, 2), (3, 4)])
        d = all_pairs_distances(g)
        lengths = dict(nx.all_pairs_shortest_path_length(to_nx(g)))
        for u in range(6):
            for v in range(6):
                if v in lengths[u]:
                    assert d.distance(u, v) == lengths[u][v]
                else:
                    assert d.distance(u, v) == INFINITE

    def test_intervals_and_shadows(self):
        d = all_pairs_distances(build_graph_expr("cycle(6)"))
        # both halves of the cycle are geodesics between antipodes
        assert d.intervals[0][3] == 0b110110
        assert d.intervals[0][1] == 0
        assert (d.shadows[1][0] >> 2) & 1
        assert not (d.shadows[0][1] >> 2) & 1


class TestInfiniteGrid:
    def test_distance(self):
        origin = GridPoint(x=0, y=0)
        assert infinite_grid_distance(origin, origin) == 0
        assert infinite_grid_distance(origin, GridPoint(x=3, y=-2)) == 5
        assert infinite_grid_distance(GridPoint(x=-1, y=4), GridPoint(x=1, y=4)) == 2

    def test_arithmetic(self):
        p = GridPoint(x=1, y=2) + GridPoint(x=3, y=-5)
        assert p == GridPoint(x=4, y=-3)
        assert p - GridPoint(x=4, y=0) == GridPoint(x=0, y=-3)
