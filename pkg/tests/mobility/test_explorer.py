import pytest

from mobgp.dsl.expr import build_graph_expr
from mobgp.errors import MobilityError
from mobgp.graphs.graph import Graph
from mobgp.mobility.configuration import Configuration, verify_schedule
from mobgp.mobility.explorer import (
    configuration_component,
    extract_witness_schedule,
    is_mobile_gp_set,
    naive_mobile_oracle,
)
from mobgp.mobility.space import ConfigurationSpace
from mobgp.helpers import bits_of
from mobgp.position.solvers import gp_number, iter_gp_masks


def grid_seed(g: Graph) -> Configuration:
    return Configuration(occupied=g.vertices((1, 1), (3, 1), (2, 3)))


class TestConfigurationComponent:
    def test_single_robot_covers_everything(self):
        g = build_graph_expr("petersen")
        component = configuration_component(g, Configuration(occupied=[0]))
        assert component.size == 10
        assert component.covered == list(range(10))

    def test_frozen_prism(self):
        g = build_graph_expr("cartesian(cycle(4),complete(2))")
        report = gp_number(g)
        assert report.value == 4
        component = configuration_component(g, Configuration(occupied=report.witness))
        assert component.size == 1
        assert component.covered == report.witness

    def test_grid(self):
        g = build_graph_expr("cartesian(path(3),path(3))")
        assert configuration_component(g, grid_seed(g)).covered == list(range(9))

    def test_start_must_be_in_general_position(self):
        g = build_graph_expr("path(3)")
        with pytest.raises(MobilityError):
            configuration_component(g, Configuration(occupied=[0, 1, 2]))


class TestMobility:
    def test_one_robot_is_mobile(self):
        g = build_graph_expr("cartesian(cycle(5),path(2))")
        assert all(is_mobile_gp_set(g, Configuration(occupied=[v])) for v in range(g.order))

    def test_frozen_prism_is_not_mobile(self):
        g = build_graph_expr("cartesian(cycle(4),complete(2))")
        s = Configuration(occupied=gp_number(g).witness)
        assert not is_mobile_gp_set(g, s)
        assert not naive_mobile_oracle(g, s)

    def test_petersen_has_a_mobile_set_of_four(self):
        g = build_graph_expr("petersen")
        space = ConfigurationSpace(g)
        mobile = [
            mask
            for mask in iter_gp_masks(space.index, 4)
            if is_mobile_gp_set(g, Configuration.from_mask(mask))
        ]
        assert len(mobile) > 0
        assert not any(
            is_mobile_gp_set(g, Configuration.from_mask(mask)) for mask in iter_gp_masks(space.index, 5)
        )

    def test_preconditions(self):
        with pytest.raises(MobilityError):
            is_mobile_gp_set(Graph.from_edges(3, [(0, 1)]), Configuration(occupied=[0]))
        with pytest.raises(MobilityError):
            is_mobile_gp_set(build_graph_expr("path(4)"), Configuration(occupied=[0, 1, 3]))
        with pytest.raises(MobilityError):
            is_mobile_gp_set(build_graph_expr("path(4)"), Configuration(occupied=[0, 9]))

    def test_naive_oracle(self):
        g = build_graph_expr("path(3)")
        assert naive_mobile_oracle(g, Configuration(occupied=g.vertices(1, 2)))
        with pytest.raises(MobilityError):
            naive_mobile_oracle(build_graph_expr("petersen"), Configuration(occupied=[0]), threshold=5)

    def test_oracle_equivalence(self, atlas_graphs, atlas_graphs_order_7):
        for g in atlas_graphs + atlas_graphs_order_7:
            space = ConfigurationSpace(g)
            for k in range(1, g.order + 1):
                for mask in iter_gp_masks(space.index, k):
                    s = Configuration.from_mask(mask)
                    assert is_mobile_gp_set(g, s) == naive_mobile_oracle(g, s), (g.name, s.occupied)

    def test_product_oracle_equivalence(self):
        for expression in ["cartesian(cycle(4),complete(2))", "cartesian(path(4),path(2))", "corona(cycle(4),complete(1))"]:
            g = build_graph_expr(expression)
            space = ConfigurationSpace(g)
            for k in range(1, 5):
                for mask in iter_gp_masks(space.index, k):
                    s = Configuration.from_mask(mask)
                    assert is_mobile_gp_set(g, s) == naive_mobile_oracle(g, s)

    def test_moves_are_reversible(self, atlas_graphs, atlas_graphs_order_7):
        for g in atlas_graphs + atlas_graphs_order_7:
            space = ConfigurationSpace(g)
            for k in range(1, g.order + 1):
                for mask in iter_gp_masks(space.index, k):
                    for source, target, nxt in space.legal_moves(mask):
                        back = [m for m in space.legal_moves(nxt) if m[0] == target and m[1] == source]
                        assert back == [(target, source, mask)]


class TestWitness:
    def test_single_robot(self):
        g = build_graph_expr("path(5)")
        s = extract_witness_schedule(g, Configuration(occupied=[g.vertex(3)]))
        report = verify_schedule(g, s)
        assert report.valid and report.complete

    def test_grid(self):
        g = build_graph_expr("cartesian(path(3),path(3))")
        s = extract_witness_schedule(g, grid_seed(g))
        assert s.graph == g.name
        assert s.labels == g.label_texts()
        report = verify_schedule(g, s)
        assert report.valid and report.complete
        assert report.robots == 3

    def test_witnesses_verify(self, atlas_graphs):
        for g in atlas_graphs[::7]:
            space = ConfigurationSpace(g)
            for mask in iter_gp_masks(space.index, min(2, g.order)):
                s = Configuration.from_mask(mask)
                if is_mobile_gp_set(g, s):
                    report = verify_schedule(g, extract_witness_schedule(g, s))
                    assert report.valid and report.complete, (g.name, bits_of(mask))

    def test_not_mobile_raises(self):
        g = build_graph_expr("cartesian(cycle(4),complete(2))")
        with pytest.raises(MobilityError):
            extract_witness_schedule(g, Configuration(occupied=gp_number(g).witness))
