"""
Mobile general position schedules on Cartesian products

Vertices are addressed by their pair labels, so (i, j) below is the vertex
labelled "(i,j)" of the product graph.
"""
from ..dsl.expr import build_graph_expr
from ..graphs.graph import Graph
from ..mobility.configuration import Schedule
from .algorithm import ScheduleAlgorithm
from .recorder import MoveRecorder, reversed_moves


class ProductFamilySchedule(ScheduleAlgorithm):
    """A named schedule family on a graph given by an expression"""

    @property
    def expression(self) -> str:
        raise NotImplementedError

    def _target_graph(self) -> Graph:
        return build_graph_expr(self.expression)


class HammingSchedule(ProductFamilySchedule):
    """n+m-3 robots on K_n□K_m

    The robots start on rows 2..n of the first column and on the last m-2
    vertices of the first row. Column by column the n-1 row robots step
    right while a first row robot jumps back behind them.
    """

    n: int
    m: int

    @property
    def expression(self) -> str:
        return f"cartesian(complete({self.n}),complete({self.m}))"

    def _check_input(self):
        if self.m < 3 or self.n < self.m:
            raise ValueError(f"Expected n >= m >= 3, got n={self.n}, m={self.m}")

    def _execute(self, target: Graph) -> Schedule:
        n, m = self.n, self.m
        v = target.vertex
        initial = [v(i, 1) for i in range(2, n + 1)] + [v(1, y) for y in range(3, m + 1)]
        recorder = MoveRecorder(target, initial)
        for j in range(1, m):
            for i in range(2, n + 1):
                recorder.move(v(i, j), v(i, j + 1))
            if j + 2 <= m:
                recorder.move(v(1, j + 2), v(1, j))
        # with three columns the middle vertex of the first row is still missing
        if not recorder.is_covered(v(1, m - 1)):
            recorder.move(v(1, m - 2), v(1, m - 1))
        return recorder.schedule()


class StarSquareSchedule(ProductFamilySchedule):
    """k+1 robots on K_{1,k}□K_{1,k}"""

    k: int

    @property
    def expression(self) -> str:
        return f"cartesian(star({self.k}),star({self.k}))"

    def _check_input(self):
        if self.k < 2:
            raise ValueError(f"Expected k >= 2, got k={self.k}")

    def _execute(self, target: Graph) -> Schedule:
        k = self.k
        v = target.vertex
        recorder = MoveRecorder(target, [v(0, 0)] + [v(i, 1) for i in range(1, k + 1)])

        # visit (a,b) for b >= 2 and every (i,0), then undo
        for a in range(1, k + 1):
            for b in range(2, k + 1):
                start = len(recorder.moves)
                recorder.move(v(0, 0), v(0, b))
                for i in range(1, k + 1):
                    if i != a:
                        recorder.move(v(i, 1), v(i, 0))
                recorder.move(v(0, b), v(a, b))
                for source, target_vertex in reversed_moves(recorder.moves[start:]):
                    recorder.move(source, target_vertex)

        # the remaining vertex (0,1)
        recorder.move(v(0, 0), v(0, 2))
        for i in range(2, k + 1):
            recorder.move(v(i, 1), v(i, 0))
        recorder.move(v(1, 1), v(0, 1))
        return recorder.schedule()


class GridSchedule(ProductFamilySchedule):
    """Three robots on the grid P_n□P_m, starting on (1,1), (n,1) and (2,m)"""

    n: int
    m: int

    @property
    def expression(self) -> str:
        return f"cartesian(path({self.n}),path({self.m}))"

    def _check_input(self):
        if self.n < 3 or self.m < 3:
            raise ValueError(f"Expected n, m >= 3, got n={self.n}, m={self.m}")

    def _execute(self, target: Graph) -> Schedule:
        n, m = self.n, self.m
        v = target.vertex
        recorder = MoveRecorder(target, [v(1, 1), v(n, 1), v(2, m)])

        first_row = [v(1, y) for y in range(1, m)]
        recorder.walk(first_row)
        recorder.walk(list(reversed(first_row)))
        self._add_log("first row visited")

        last_row = [v(n, y) for y in range(1, m)]
        recorder.walk(last_row)
        recorder.walk(list(reversed(last_row)))
        self._add_log("last row visited")

        interior = 0
        for x in range(2, n):
            for y in range(2, m + 1):
                interior |= 1 << v(x, y)
        recorder.tour(v(2, m), interior)
        self._add_log("interior visited")

        recorder.move(v(n, 1), v(n, 2))
        recorder.walk([v(x, 1) for x in range(1, n)])
        recorder.move(v(2, m), v(1, m))
        recorder.walk([v(n, y) for y in range(2, m + 1)])
        return recorder.schedule()


class PrismCycleSchedule(ProductFamilySchedule):
    """Four robots rotating around C_n□K_2

    The cycle vertex 0 is the starting point of the first layer robot, the
    layers are labelled 1 and 2.
    """

    n: int

    @property
    def expression(self) -> str:
        return f"cartesian(cycle({self.n}),complete(2))"

    def _check_input(self):
        if self.n < 5:
            raise ValueError(f"Expected n >= 5, got n={self.n}")

    def _execute(self, target: Graph) -> Schedule:
        n = self.n
        c = (n + 1) // 2

        def v(i: int, layer: int) -> int:
            return target.vertex(i % n, layer)

        recorder = MoveRecorder(target, [v(0, 1), v(c, 1), v(1, 2), v(c + 1, 2)])
        for t in range(n):
            if n % 2 == 1:
                round_moves = [
                    (v(1 + t, 2), v(2 + t, 2)),
                    (v(t, 1), v(1 + t, 1)),
                    (v(c + 1 + t, 2), v(c + 2 + t, 2)),
                    (v(c + t, 1), v(c + 1 + t, 1)),
                ]
            else:
                round_moves = [
                    (v(1 + t, 2), v(2 + t, 2)),
                    (v(c + 1 + t, 2), v(c + 2 + t, 2)),
                    (v(t, 1), v(1 + t, 1)),
                    (v(c + t, 1), v(c + 1 + t, 1)),
                ]
            for source, target_vertex in round_moves:
                recorder.move(source, target_vertex)
        return recorder.schedule()


class C4CylinderSchedule(ProductFamilySchedule):
    """Three robots on C_4□P_3"""

    @property
    def expression(self) -> str:
        return "cartesian(cycle(4),path(3))"

    def _check_input(self):
        pass

    def _execute(self, target: Graph) -> Schedule:
        def v(i: int, j: int) -> int:
            return target.vertex(i % 4, j)

        recorder = MoveRecorder(target, [v(0, 1), v(1, 2), v(0, 3)])
        for i in range(3):
            recorder.move(v(i + 1, 2), v(i + 2, 2))
            recorder.move(v(i, 3), v(i + 1, 3))
            recorder.move(v(i, 1), v(i + 1, 1))
        return recorder.schedule()


class Cylinder5Schedule(ProductFamilySchedule):
    """Five robots on C_r□P_5 for r = 9 and r >= 11"""

    r: int

    @property
    def expression(self) -> str:
        return f"cartesian(cycle({self.r}),path(5))"

    def _check_input(self):
        if self.r != 9 and self.r < 11:
            raise ValueError(f"Expected r = 9 or r >= 11, got r={self.r}")

    def _execute(self, target: Graph) -> Schedule:
        r = self.r
        h = r // 2

        def v(i: int, j: int) -> int:
            return target.vertex(i % r, j)

        recorder = MoveRecorder(
            target, [v(1, 1), v(4, 2), v(h + 2, 3), v(0, 4), v(3, 5)]
        )
        for i in range(r - 1):
            moves = {
                1: (v(i + 1, 1), v(i + 2, 1)),
                2: (v(i + 4, 2), v(i + 5, 2)),
                3: (v(i + h + 2, 3), v(i + h + 3, 3)),
                4: (v(i, 4), v(i + 1, 4)),
                5: (v(i + 3, 5), v(i + 4, 5)),
            }
            order = [3, 1, 4, 2, 5] if r == 9 else [2, 5, 3, 1, 4]
            for layer in order:
                recorder.move(*moves[layer])
        return recorder.schedule()
