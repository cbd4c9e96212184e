import pytest

from mobgp.graphs.distance import GridPoint
from mobgp.mobility.infinite_grid import Direction, round_moves, verify_infinite_grid_rounds

CENTERS = [GridPoint(x=0, y=0), GridPoint(x=5, y=-3), GridPoint(x=-7, y=11)]


class TestInfiniteGrid:
    def test_single_round(self):
        assert verify_infinite_grid_rounds(GridPoint(x=0, y=0), 1, Direction.RIGHT)

    def test_ten_rounds_up(self):
        assert verify_infinite_grid_rounds(GridPoint(x=5, y=-3), 10, Direction.UP)

    @pytest.mark.parametrize("center", CENTERS)
    @pytest.mark.parametrize("direction", list(Direction))
    def test_long_runs(self, center, direction):
        assert verify_infinite_grid_rounds(center, 25, direction)

    def test_round_moves(self):
        moves = round_moves(GridPoint(x=0, y=0), Direction.RIGHT)
        assert moves[0] == (GridPoint(x=1, y=0), GridPoint(x=2, y=0))
        assert moves[-1] == (GridPoint(x=-1, y=0), GridPoint(x=0, y=0))

    def test_reordered_moves_fail(self):
        # moving the back robot into the center first lines it up with the side robots
        assert not verify_infinite_grid_rounds(GridPoint(x=0, y=0), 1, Direction.RIGHT, [3, 0, 1, 2])

    def test_direction_by_name(self):
        assert verify_infinite_grid_rounds(GridPoint(x=0, y=0), 3, "left")

    def test_invalid_arguments(self):
        with pytest.raises(ValueError):
            verify_infinite_grid_rounds(GridPoint(x=0, y=0), 0, Direction.UP)
        with pytest.raises(ValueError):
            verify_infinite_grid_rounds(GridPoint(x=0, y=0), 1, Direction.UP, [0, 0, 1, 2])
