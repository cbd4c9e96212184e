"""
Mobile general position schedules on coronas and joins
"""
from ..graphs.graph import Graph
from ..mobility.configuration import Schedule
from .algorithm_products import ProductFamilySchedule
from .recorder import MoveRecorder


class CoronaCycleSchedule(ProductFamilySchedule):
    """ceil(n/2)+1 robots on C_n⊙K_1

    The robots start on the leaves 0'..c' with c = ceil(n/2). In every sweep
    the robot on the last leaf of the block steps onto its center, walks
    around the cycle away from the block (taking the leaf of every center it
    passes) and settles on the leaf just before the block, so the block
    slides one step back.
    """

    n: int

    @property
    def expression(self) -> str:
        return f"corona(cycle({self.n}),complete(1))"

    def _check_input(self):
        if self.n < 3:
            raise ValueError(f"Expected n >= 3, got n={self.n}")

    def _execute(self, target: Graph) -> Schedule:
        n = self.n
        c = (n + 1) // 2

        def center(i: int) -> int:
            return i % n

        def leaf(i: int) -> int:
            return n + i % n

        recorder = MoveRecorder(target, [leaf(i) for i in range(c + 1)])
        for i in range(0, -c - 1, -1):
            a, b = (c + i) % n, (i - 1) % n
            recorder.move(leaf(a), center(a))
            j = a
            while j != b:
                nxt = center(j + 1)
                recorder.move(center(j), nxt)
                j = nxt
                if j != b and not recorder.is_covered(leaf(j)):
                    recorder.move(center(j), leaf(j))
                    recorder.move(leaf(j), center(j))
            recorder.move(center(b), leaf(b))
        return recorder.schedule()


class BirdcageJoinSchedule(ProductFamilySchedule):
    """n+1 robots on the join of the birdcage B_n with K_1"""

    n: int

    @property
    def expression(self) -> str:
        return f"join(birdcage({self.n}),complete(1))"

    def _check_input(self):
        if self.n < 2:
            raise ValueError(f"Expected n >= 2, got n={self.n}")

    def _execute(self, target: Graph) -> Schedule:
        n = self.n
        u = list(range(n))
        v = list(range(n, 2 * n))
        z, x = 2 * n, 2 * n + 1

        recorder = MoveRecorder(target, u + [x])
        recorder.move(x, z)
        for i in range(n):
            recorder.move(u[i], v[i])
            recorder.move(v[i], u[i])
        return recorder.schedule()


class CliqueMinusEdgeJoinSchedule(ProductFamilySchedule):
    """r+s-3 robots on the join of K_r and K_s, each missing one edge"""

    r: int
    s: int

    @property
    def expression(self) -> str:
        return f"join(complete_minus_edge({self.r}),complete_minus_edge({self.s}))"

    def _check_input(self):
        if self.r < 3 or self.s < 3:
            raise ValueError(f"Expected r, s >= 3, got r={self.r}, s={self.s}")

    def _execute(self, target: Graph) -> Schedule:
        r, s = self.r, self.s
        x1, x2, y1, y2 = 0, 1, r, r + 1
        initial = [x1] + list(range(2, r)) + list(range(r + 2, r + s))

        recorder = MoveRecorder(target, initial)
        recorder.move(x1, y1)
        recorder.move(y1, x2)
        recorder.move(x2, y2)
        return recorder.schedule()
