"""
Lower bound schedules on joins and coronas
"""
from ..graphs.families import complete
from ..graphs.graph import Graph
from ..graphs.products import corona_product, join
from ..graphs.structure import max_clique
from ..helpers import mask_of
from ..mobility.configuration import Schedule
from .algorithm import ScheduleAlgorithm, check_named
from .algorithm_factor import _check_base
from .recorder import MoveRecorder


class JoinLowerBoundSchedule(ScheduleAlgorithm):
    """min(ω(G), ω(H)) + 1 robots on G∨H

    The robots start on a maximum clique of the factor with the smaller
    clique number (H on a tie) plus one lone robot on the other factor. The
    lone robot tours the graph, all clique robots but one move onto a
    maximum clique of the other factor and the last one tours the graph.
    """

    g: Graph
    h: Graph

    def _check_input(self):
        check_named(self.g)
        check_named(self.h)
        if self.g.order == 1 or self.h.order == 1:
            return
        if min(len(max_clique(self.g)), len(max_clique(self.h))) < 2:
            raise ValueError("Both factors need an edge unless one of them is K_1")

    def _target_graph(self) -> Graph:
        return join(self.g, self.h)

    def _execute(self, target: Graph) -> Schedule:
        ng = self.g.order
        g_clique = max_clique(self.g)
        h_clique = [ng + v for v in max_clique(self.h)]
        if len(h_clique) <= len(g_clique):
            small, large = h_clique, g_clique
        else:
            small, large = g_clique, h_clique

        lone = large[0]
        recorder = MoveRecorder(target, small + [lone])
        recorder.tour(lone)
        self._add_log("lone robot tour done")
        for i in range(len(small) - 1):
            recorder.move(small[i], large[i + 1])
        recorder.tour(small[-1])
        return recorder.schedule()


class CoronaSatelliteSchedule(ScheduleAlgorithm):
    """Lower bound for G⊙H from a mobile schedule of H∨K_1

    The base runs in the first satellite copy with K_1 played by the first
    center. The first robot on that center tours every vertex outside the
    copy and comes back.
    """

    g: Graph
    h: Graph
    base: Schedule

    def _check_input(self):
        check_named(self.g)
        check_named(self.h)
        if not self.g.is_connected():
            raise ValueError(f"The factor {self.g.name} is not connected")
        _check_base(join(self.h, complete(1)), self.base)

    def _target_graph(self) -> Graph:
        return corona_product(self.g, self.h)

    def _execute(self, target: Graph) -> Schedule:
        ng, nh = self.g.order, self.h.order
        mapping = {y: ng + y for y in range(nh)}
        mapping[nh] = 0
        outside = target.full_mask & ~mask_of(ng + y for y in range(nh))

        recorder = MoveRecorder(target, [mapping[v] for v in self.base.initial])
        done = False
        if recorder.is_occupied(0):
            recorder.tour(0, outside)
            done = True
        for a, b in self.base.moves:
            recorder.move(mapping[a], mapping[b])
            if not done and mapping[b] == 0:
                recorder.tour(0, outside)
                done = True
        return recorder.schedule()


class CoronaCenterSchedule(ScheduleAlgorithm):
    """Lower bound for G⊙H from a mobile schedule of G

    The base runs on the centers, a robot reaching a center for the first
    time tours the satellite copy of that center.
    """

    g: Graph
    h: Graph
    base: Schedule

    def _check_input(self):
        check_named(self.g)
        check_named(self.h)
        _check_base(self.g, self.base)

    def _target_graph(self) -> Graph:
        return corona_product(self.g, self.h)

    def _execute(self, target: Graph) -> Schedule:
        ng, nh = self.g.order, self.h.order

        def satellites(v: int) -> int:
            return mask_of([v] + [ng + v * nh + y for y in range(nh)])

        recorder = MoveRecorder(target, self.base.initial)
        toured = set()
        for v in self.base.initial:
            recorder.tour(v, satellites(v))
            toured.add(v)
        for a, b in self.base.moves:
            recorder.move(a, b)
            if b not in toured:
                recorder.tour(b, satellites(b))
                toured.add(b)
        return recorder.schedule()


def join_lower_bound_schedule(g: Graph, h: Graph) -> Schedule:
    """Schedule on G∨H with min(ω(G), ω(H)) + 1 robots"""
    return JoinLowerBoundSchedule(g=g, h=h).execute()


def corona_satellite_schedule(g: Graph, h: Graph, base: Schedule) -> Schedule:
    return CoronaSatelliteSchedule(g=g, h=h, base=base).execute()


def corona_center_schedule(g: Graph, h: Graph, base: Schedule) -> Schedule:
    return CoronaCenterSchedule(g=g, h=h, base=base).execute()
