"""
Schedules on G□H built from the factor G

Both constructions keep every robot in its own H-column or in a single
G-layer, which is what makes the moves legal.
"""
from typing import List

import networkx as nx

from ..graphs.distance import all_pairs_distances
from ..graphs.graph import Graph
from ..graphs.products import cartesian_product
from ..helpers import bits_of, mask_of
from ..mobility.configuration import Schedule, verify_schedule
from ..position.geodesics import is_outer_general_position
from .algorithm import ScheduleAlgorithm, check_named
from .recorder import MoveRecorder, shortest_path


def _check_base(g: Graph, base: Schedule):
    report = verify_schedule(g, base)
    if not report.valid:
        raise ValueError(f"The base schedule has an illegal move at index {report.failure_index}")
    if not report.complete:
        raise ValueError(f"The base schedule covers {len(report.covered)} of {g.order} vertices")


class FactorMobSchedule(ScheduleAlgorithm):
    """Replay a mobile schedule of G in the layer G^0 of G□H

    Whenever a robot reaches a vertex (g,0) for the first time it tours the
    H-layer of g depth first and comes back.
    """

    g: Graph
    h: Graph
    base: Schedule

    def _check_input(self):
        check_named(self.g)
        check_named(self.h)
        if not self.h.is_connected():
            raise ValueError(f"The factor {self.h.name} is not connected")
        _check_base(self.g, self.base)

    def _target_graph(self) -> Graph:
        return cartesian_product(self.g, self.h)

    def _execute(self, target: Graph) -> Schedule:
        nh = self.h.order
        layer = {a: a * nh for a in range(self.g.order)}

        def column(a: int) -> int:
            return mask_of(a * nh + b for b in range(nh))

        recorder = MoveRecorder(target, [layer[a] for a in self.base.initial])
        toured = set()
        for a in self.base.initial:
            recorder.tour(layer[a], column(a))
            toured.add(a)
        for a, b in self.base.moves:
            recorder.move(layer[a], layer[b])
            if b not in toured:
                recorder.tour(layer[b], column(b))
                toured.add(b)
        return recorder.schedule()


class GpoFactorSchedule(ScheduleAlgorithm):
    """|X| robots on G□H from an outer general position set X of G

    Robot i starts on (u_i,0) and only ever visits G_i, the component of u_i
    in G minus the other members of X. For every other layer h each robot in
    turn walks up its column, tours G_i x {h} and walks back. Then all robots
    step to the smallest neighbor layer of 0 and in turn tour G_i x {0}.
    """

    g: Graph
    h: Graph
    x: List[int]

    def _check_input(self):
        check_named(self.g)
        check_named(self.h)
        for factor in (self.g, self.h):
            if not factor.is_connected():
                raise ValueError(f"The factor {factor.name} is not connected")
        if len(self.x) == 0 or len(set(self.x)) != len(self.x):
            raise ValueError(f"Invalid set {self.x}")
        for u in self.x:
            if not 0 <= u < self.g.order:
                raise ValueError(f"Vertex {u} does not exist in {self.g.name}")
        if not is_outer_general_position(all_pairs_distances(self.g), self.x):
            raise ValueError(f"{self.x} is not an outer general position set of {self.g.name}")

    def _target_graph(self) -> Graph:
        return cartesian_product(self.g, self.h)

    def _components(self) -> List[int]:
        members = mask_of(self.x)
        result = []
        for u in sorted(self.x):
            allowed = self.g.full_mask & ~(members & ~(1 << u))
            subgraph = self.g.to_networkx().subgraph(bits_of(allowed))
            result.append(mask_of(nx.node_connected_component(subgraph, u)))
        return result

    def _execute(self, target: Graph) -> Schedule:
        nh = self.h.order
        robots = sorted(self.x)
        components = self._components()

        def pid(a: int, b: int) -> int:
            return a * nh + b

        def layer_mask(component: int, b: int) -> int:
            return mask_of(pid(a, b) for a in range(self.g.order) if (component >> a) & 1)

        recorder = MoveRecorder(target, [pid(u, 0) for u in robots])
        for layer in range(1, nh):
            for u, component in zip(robots, components):
                column = [pid(u, b) for b in shortest_path(self.h, 0, layer)]
                recorder.walk(column)
                recorder.tour(pid(u, layer), layer_mask(component, layer))
                recorder.walk(list(reversed(column)))
            self._add_log(f"layer {self.h.label(layer)} visited")

        if nh == 1:
            for u, component in zip(robots, components):
                recorder.tour(pid(u, 0), layer_mask(component, 0))
            return recorder.schedule()

        shifted = self.h.adjacency[0][0]
        for u in robots:
            recorder.move(pid(u, 0), pid(u, shifted))
        for u, component in zip(robots, components):
            recorder.move(pid(u, shifted), pid(u, 0))
            recorder.tour(pid(u, 0), layer_mask(component, 0))
            recorder.move(pid(u, 0), pid(u, shifted))
        return recorder.schedule()


def factor_mob_schedule(g: Graph, h: Graph, base: Schedule) -> Schedule:
    """Schedule on G□H with the robots of a mobile schedule of G"""
    return FactorMobSchedule(g=g, h=h, base=base).execute()


def gpo_factor_schedule(g: Graph, h: Graph, x: List[int]) -> Schedule:
    """Schedule on G□H with one robot per vertex of an outer general position set of G"""
    return GpoFactorSchedule(g=g, h=h, x=x).execute()
