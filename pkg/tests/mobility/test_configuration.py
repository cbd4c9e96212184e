import pytest
from pydantic import ValidationError

from mobgp.dsl.expr import build_graph_expr
from mobgp.errors import CertificateError, MobilityError
from mobgp.graphs.distance import all_pairs_distances
from mobgp.mobility.configuration import (
    Configuration,
    FailureReason,
    Move,
    Schedule,
    TraversalReport,
    is_legal_move,
    verify_schedule,
)
from mobgp.settings import EXIT_ILLEGAL, EXIT_INCOMPLETE, EXIT_OK


class TestConfiguration:
    def test_sorted_and_distinct(self):
        assert Configuration(occupied=[4, 1, 2]).occupied == [1, 2, 4]
        assert Configuration(occupied=[0, 2]).mask == 0b101
        assert len(Configuration.from_mask(0b1011)) == 3
        with pytest.raises(ValidationError):
            Configuration(occupied=[1, 1])

    def test_move_needs_two_vertices(self):
        with pytest.raises(ValidationError):
            Move(source=3, target=3)


class TestLegalMove:
    def test_grid_move(self):
        g = build_graph_expr("cartesian(path(3),path(3))")
        d = all_pairs_distances(g)
        c = Configuration(occupied=g.vertices((1, 1), (3, 1), (2, 3)))
        assert is_legal_move(d, c, Move(source=g.vertex(3, 1), target=g.vertex(3, 2)))
        # (2,1) would lie between (3,1) and (2,3)
        assert not is_legal_move(d, c, Move(source=g.vertex(1, 1), target=g.vertex(2, 1)))

    def test_hamming_move(self):
        g = build_graph_expr("cartesian(complete(4),complete(3))")
        d = all_pairs_distances(g)
        c = Configuration(occupied=g.vertices((2, 1), (3, 1), (4, 1), (1, 3)))
        assert is_legal_move(d, c, Move(source=g.vertex(2, 1), target=g.vertex(2, 2)))

    def test_occupied_and_distant_targets(self):
        g = build_graph_expr("path(5)")
        d = all_pairs_distances(g)
        c = Configuration(occupied=[1, 2])
        assert not is_legal_move(d, c, Move(source=1, target=2))
        assert not is_legal_move(d, c, Move(source=2, target=4))

    def test_source_must_be_occupied(self):
        d = all_pairs_distances(build_graph_expr("path(5)"))
        with pytest.raises(MobilityError):
            is_legal_move(d, Configuration(occupied=[0]), Move(source=1, target=2))


class TestVerifySchedule:
    def test_valid_and_complete(self):
        g = build_graph_expr("path(4)")
        report = verify_schedule(g, Schedule(graph="path(4)", initial=[0], moves=[(0, 1), (1, 2), (2, 3)]))
        assert report.valid
        assert report.complete
        assert report.covered == [0, 1, 2, 3]
        assert report.exit_code == EXIT_OK

    def test_incomplete(self):
        g = build_graph_expr("path(4)")
        report = verify_schedule(g, Schedule(graph="path(4)", initial=[0], moves=[(0, 1)]))
        assert report.valid
        assert not report.complete
        assert report.exit_code == EXIT_INCOMPLETE

    @pytest.mark.parametrize(
        "expression,initial,moves,index,reason",
        [
            ("path(5)", [0, 2], [(2, 1), (0, 1)], 1, FailureReason.TARGET_OCCUPIED),
            ("path(5)", [0, 4], [(0, 2)], 0, FailureReason.NOT_ADJACENT),
            ("path(5)", [0, 4], [(0, 1), (2, 3)], 1, FailureReason.SOURCE_EMPTY),
            ("cycle(6)", [0, 2, 4], [(0, 1)], 0, FailureReason.BREAKS_GENERAL_POSITION),
        ],
    )
    def test_first_illegal_move(self, expression, initial, moves, index, reason):
        g = build_graph_expr(expression)
        report = verify_schedule(g, Schedule(graph=expression, initial=initial, moves=moves))
        assert not report.valid
        assert report.failure_index == index
        assert report.failure_reason == reason
        assert report.exit_code == EXIT_ILLEGAL

    def test_coverage_stops_at_failure(self):
        g = build_graph_expr("path(5)")
        s = Schedule(graph="path(5)", initial=[0, 4], moves=[(0, 1), (1, 2), (2, 4), (4, 3)])
        report = verify_schedule(g, s)
        assert report.failure_index == 2
        assert report.covered == [0, 1, 2, 4]

    def test_initial_not_in_general_position(self):
        g = build_graph_expr("path(3)")
        report = verify_schedule(g, Schedule(graph="path(3)", initial=[0, 1, 2]))
        assert not report.valid
        assert report.failure_index is None
        assert report.failure_reason == FailureReason.BREAKS_GENERAL_POSITION

    def test_malformed_certificates(self):
        g = build_graph_expr("path(4)")
        with pytest.raises(CertificateError):
            verify_schedule(g, Schedule(graph="path(5)", initial=[0]))
        with pytest.raises(CertificateError):
            verify_schedule(g, Schedule(graph="path(4", initial=[0]))
        with pytest.raises(CertificateError):
            verify_schedule(g, Schedule(graph="path(4)", initial=[0], moves=[(0, 7)]))

    def test_report_consistency(self):
        with pytest.raises(ValidationError):
            TraversalReport(valid=True, covered=[0], order=1, failure_index=0)


class TestScheduleFile:
    def test_file_round_trip(self, tmp_path):
        s = Schedule(graph="cycle(5)", initial=[3, 0], moves=[(0, 1)], labels=["0", "1", "2", "3", "4"])
        filename = s.to_file(str(tmp_path / "certificate.json"))
        t = Schedule.from_file(filename)
        assert t == s
        assert t.initial == [0, 3]
        assert t.robots == 2
        assert t.move_list() == [Move(source=0, target=1)]

    def test_labels_are_optional(self, tmp_path):
        s = Schedule(graph="cycle(5)", initial=[0])
        filename = s.to_file(str(tmp_path / "plain.json"))
        assert "labels" not in open(filename).read()

    def test_malformed_file(self, tmp_path):
        filename = tmp_path / "broken.json"
        filename.write_text('{"graph": "cycle(5)", "initial": [0]')
        with pytest.raises(CertificateError):
            Schedule.from_file(str(filename))
        filename.write_text('{"graph": "cycle(5)", "moves": [[0, 1]]}')
        with pytest.raises(CertificateError):
            Schedule.from_file(str(filename))

    def test_missing_file(self, tmp_path):
        with pytest.raises(CertificateError):
            Schedule.from_file(str(tmp_path / "missing.json"))
