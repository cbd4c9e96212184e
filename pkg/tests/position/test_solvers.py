from itertools import combinations

import pytest

from mobgp.dsl.expr import build_graph_expr
from mobgp.errors import PositionError
from mobgp.graphs.distance import all_pairs_distances
from mobgp.position.geodesics import is_general_position, is_outer_general_position
from mobgp.position.solvers import enumerate_gp_sets, gp_number, gpo_number


def brute_force_maximum(g, predicate) -> int:
    d = all_pairs_distances(g)
    for size in range(g.order, 0, -1):
        if any(predicate(d, s) for s in combinations(range(g.order), size)):
            return size
    return 0


class TestGpNumber:
    @pytest.mark.parametrize(
        "expression,expected",
        [
            ("petersen", 6),
            ("cartesian(complete(4),complete(3))", 5),
            ("cartesian(star(3),star(3))", 6),
            ("complete(5)", 5),
            ("path(1)", 1),
            ("path(6)", 2),
            ("cycle(4)", 2),
            ("cycle(5)", 3),
            ("cycle(7)", 3),
        ],
    )
    def test_known_values(self, expression, expected):
        report = gp_number(build_graph_expr(expression))
        assert report.value == expected
        assert len(report.witness) == expected
        assert report.explored > 0

    def test_witness_is_lexicographically_smallest(self):
        assert gp_number(build_graph_expr("path(4)")).witness == [0, 1]
        assert gp_number(build_graph_expr("star(3)")).witness == [1, 2, 3]

    def test_witness_in_general_position(self, random_graphs):
        for g in random_graphs:
            report = gp_number(g)
            assert is_general_position(all_pairs_distances(g), report.witness)

    def test_agrees_with_brute_force(self, atlas_graphs, atlas_graphs_order_7, random_graphs_order_8_9):
        for g in atlas_graphs + atlas_graphs_order_7 + random_graphs_order_8_9:
            assert gp_number(g).value == brute_force_maximum(g, is_general_position), g.name


class TestGpoNumber:
    @pytest.mark.parametrize(
        "expression,expected",
        [
            ('tree("6 5;0 1;0 2;0 3;3 4;3 5")', 4),
            ("cycle(8)", 2),
            ("complete_bipartite(3,3)", 3),
            ("complete(4)", 4),
        ],
    )
    def test_known_values(self, expression, expected):
        assert gpo_number(build_graph_expr(expression)).value == expected

    def test_agrees_with_brute_force(self, atlas_graphs, atlas_graphs_order_7, random_graphs_order_8_9):
        for g in atlas_graphs + atlas_graphs_order_7 + random_graphs_order_8_9:
            report = gpo_number(g)
            assert report.value == brute_force_maximum(g, is_outer_general_position), g.name
            assert is_outer_general_position(all_pairs_distances(g), report.witness)

    def test_at_most_gp(self, atlas_graphs, random_graphs):
        for g in atlas_graphs + random_graphs:
            assert gpo_number(g).value <= gp_number(g).value


class TestEnumerateGpSets:
    def test_path(self):
        g = build_graph_expr("path(4)")
        assert list(enumerate_gp_sets(g, 2)) == [list(p) for p in combinations(range(4), 2)]
        assert list(enumerate_gp_sets(g, 3)) == []

    def test_petersen_count(self):
        g = build_graph_expr("petersen")
        d = all_pairs_distances(g)
        expected = [list(s) for s in combinations(range(10), 6) if is_general_position(d, s)]
        assert list(enumerate_gp_sets(g, 6, d)) == expected

    def test_invalid_size(self):
        with pytest.raises(PositionError):
            list(enumerate_gp_sets(build_graph_expr("path(3)"), 0))

    @pytest.mark.parametrize("n,m", [(3, 3), (4, 3), (4, 4), (5, 3), (5, 4), (5, 5)])
    def test_hamming_maximum_sets_are_row_plus_column(self, n, m):
        g = build_graph_expr(f"cartesian(complete({n}),complete({m}))")
        expected = sorted(
            sorted([a * m + j for a in range(n) if a != i] + [i * m + b for b in range(m) if b != j])
            for i in range(n)
            for j in range(m)
        )
        assert sorted(enumerate_gp_sets(g, n + m - 2)) == expected
