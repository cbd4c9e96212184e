import pytest

from mobgp.dsl.expr import build_graph_expr
from mobgp.errors import MobilityError
from mobgp.helpers import mask_of
from mobgp.mobility.configuration import verify_schedule
from mobgp.schedules.recorder import MoveRecorder, reversed_moves, shortest_path


class TestMoveRecorder:
    def test_moves_and_coverage(self):
        g = build_graph_expr("path(4)")
        recorder = MoveRecorder(g, [0])
        recorder.walk([0, 1, 2])
        assert recorder.moves == [(0, 1), (1, 2)]
        assert recorder.is_occupied(2)
        assert recorder.is_covered(1)
        assert not recorder.complete

    def test_occupancy_errors(self):
        recorder = MoveRecorder(build_graph_expr("path(4)"), [0, 3])
        with pytest.raises(MobilityError):
            recorder.move(1, 2)
        recorder.move(0, 1)
        with pytest.raises(MobilityError):
            recorder.move(3, 1)

    def test_replay(self):
        recorder = MoveRecorder(build_graph_expr("cycle(6)"), [3])
        recorder.replay([(0, 1), (1, 2)], {0: 3, 1: 4, 2: 5})
        assert recorder.moves == [(3, 4), (4, 5)]

    def test_tour_returns_home(self):
        g = build_graph_expr("star(3)")
        recorder = MoveRecorder(g, [1])
        visited = recorder.tour(1)
        assert visited == g.full_mask
        assert recorder.is_occupied(1)
        assert recorder.complete
        report = verify_schedule(g, recorder.schedule())
        assert report.valid and report.complete

    def test_tour_keeps_general_position(self):
        g = build_graph_expr("cycle(6)")
        recorder = MoveRecorder(g, [0, 3])
        # 3 is occupied, so both sides are toured separately
        visited = recorder.tour(0)
        assert visited == mask_of([0, 1, 2, 4, 5])
        assert verify_schedule(g, recorder.schedule()).valid

    def test_tour_inside_allowed(self):
        g = build_graph_expr("path(5)")
        recorder = MoveRecorder(g, [2])
        assert recorder.tour(2, mask_of([1, 2, 3])) == mask_of([1, 2, 3])
        assert recorder.moves == [(2, 1), (1, 2), (2, 3), (3, 2)]

    def test_schedule(self):
        g = build_graph_expr("path(3)")
        recorder = MoveRecorder(g, [2, 0])
        s = recorder.schedule()
        assert s.graph == "path(3)"
        assert s.initial == [0, 2]
        assert s.labels == ["1", "2", "3"]


class TestPaths:
    def test_shortest_path(self):
        g = build_graph_expr("cycle(6)")
        assert shortest_path(g, 0, 2) == [0, 1, 2]
        assert shortest_path(g, 0, 2, allowed=mask_of([0, 5, 4, 3, 2])) == [0, 5, 4, 3, 2]
        with pytest.raises(MobilityError):
            shortest_path(g, 0, 2, allowed=mask_of([0, 2]))

    def test_reversed_moves(self):
        assert reversed_moves([(0, 1), (1, 2)]) == [(2, 1), (1, 0)]
