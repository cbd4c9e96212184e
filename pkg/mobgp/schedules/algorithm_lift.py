"""
Lifting a schedule of G□P_r to G□H

H needs girth at least 2r, so every path on r vertices that does not turn
back is a geodesic of H, a window. The robots run the base schedule in the
window q, then the whole robot front slides from window to window, one
layer at a time, and runs the base schedule again (forwards or backwards)
in every window that still holds an unvisited vertex.
"""
from typing import Dict, List, Tuple

from ..graphs.distance import INFINITE, all_pairs_distances
from ..graphs.families import path
from ..graphs.graph import Graph
from ..graphs.products import cartesian_product
from ..graphs.structure import girth
from ..mobility.configuration import Schedule
from .algorithm import ScheduleAlgorithm, ScheduleExecutionError, check_named
from .algorithm_factor import _check_base
from .recorder import MoveRecorder, reversed_moves


class LiftSchedule(ScheduleAlgorithm):
    g: Graph
    h: Graph
    r: int
    base: Schedule
    q: List[int]

    def _check_input(self):
        """H may have radius below r - 1 (P_7 has radius 3 and takes r = 5), a geodesic window is enough"""
        check_named(self.g)
        check_named(self.h)
        if self.r < 1:
            raise ValueError(f"Invalid path order {self.r}")
        h_girth = girth(self.h)
        if h_girth != INFINITE and h_girth < 2 * self.r:
            raise ValueError(f"The girth of {self.h.name} is {h_girth}, expected at least {2 * self.r}")
        if not self.h.is_connected():
            raise ValueError(f"The factor {self.h.name} is not connected")
        if len(self.q) != self.r or len(set(self.q)) != self.r:
            raise ValueError(f"Expected a path of {self.r} distinct vertices, got {self.q}")
        for a, b in zip(self.q, self.q[1:]):
            if not 0 <= a < self.h.order or not 0 <= b < self.h.order or not self.h.has_edge(a, b):
                raise ValueError(f"{self.q} is not a path of {self.h.name}")
        if all_pairs_distances(self.h).distance(self.q[0], self.q[-1]) != self.r - 1:
            raise ValueError(f"{self.q} is not a geodesic of {self.h.name}")
        _check_base(cartesian_product(self.g, path(self.r)), self.base)

    def _target_graph(self) -> Graph:
        return cartesian_product(self.g, self.h)

    def _execute(self, target: Graph) -> Schedule:
        ng, nh, r = self.g.order, self.h.order, self.r

        def mapping(window: List[int]) -> Dict[int, int]:
            return {a * r + j: a * nh + window[j] for a in range(ng) for j in range(r)}

        def window_covered(window: List[int]) -> bool:
            return all(recorder.is_covered(a * nh + w) for a in range(ng) for w in window)

        def shift(window: List[int], new_window: List[int], head: bool):
            # the layer at the moving end goes first
            order = range(r - 1, -1, -1) if head else range(r)
            for j in order:
                for a in range(ng):
                    source = a * nh + window[j]
                    if recorder.is_occupied(source):
                        recorder.move(source, a * nh + new_window[j])

        def normalized(window: List[int]) -> Tuple[int, ...]:
            return min(tuple(window), tuple(reversed(window)))

        forward = self.base.moves
        backward = reversed_moves(self.base.moves)
        recorder = MoveRecorder(target, [mapping(self.q)[v] for v in self.base.initial])
        recorder.replay(forward, mapping(self.q))
        state = {"final": True}
        seen = {normalized(self.q)}

        def explore(window: List[int]):
            for head in (True, False):
                end = window[-1] if head else window[0]
                for w in self.h.adjacency[end]:
                    if w in window:
                        continue
                    new_window = window[1:] + [w] if head else [w] + window[:-1]
                    key = normalized(new_window)
                    if key in seen:
                        continue
                    seen.add(key)
                    shift(window, new_window, head)
                    if not window_covered(new_window):
                        moves = backward if state["final"] else forward
                        recorder.replay(moves, mapping(new_window))
                        state["final"] = not state["final"]
                    explore(new_window)
                    if recorder.complete:
                        return
                    shift(new_window, window, not head)

        explore(list(self.q))
        if not recorder.complete:
            raise ScheduleExecutionError(
                f"The windows of {self.h.name} do not reach every vertex of {target.name}"
            )
        self._add_log(f"{len(seen)} window(s) used")
        return recorder.schedule()


def lift_schedule(g: Graph, h: Graph, r: int, base: Schedule, q: List[int]) -> Schedule:
    """Lift a schedule of G□P_r to G□H along the geodesic q of H"""
    return LiftSchedule(g=g, h=h, r=r, base=base, q=q).execute()
