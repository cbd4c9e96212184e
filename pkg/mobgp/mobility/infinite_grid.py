"""
Four robots sliding through the two-way infinite grid

The robots start on the neighborhood N(i,j) of a center (i,j). One round in
direction e with perpendicular p moves c+e to c+2e, c+p to c+p+e, c-p to
c-p+e and finally c-e to c, after which the robots occupy N(c+e).
"""
from enum import Enum
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from ..graphs.distance import GridPoint, infinite_grid_distance


class Direction(str, Enum):
    RIGHT = "right"
    LEFT = "left"
    UP = "up"
    DOWN = "down"

    @property
    def vector(self) -> Tuple[int, int]:
        return {
            Direction.RIGHT: (1, 0),
            Direction.LEFT: (-1, 0),
            Direction.UP: (0, 1),
            Direction.DOWN: (0, -1),
        }[self]


DEFAULT_MOVE_ORDER = (0, 1, 2, 3)


def _in_general_position(points: List[GridPoint]) -> bool:
    for a, b in combinations(points, 2):
        for w in points:
            if w == a or w == b:
                continue
            if infinite_grid_distance(a, w) + infinite_grid_distance(
                w, b
            ) == infinite_grid_distance(a, b):
                return False
    return True


def round_moves(center: GridPoint, direction: Direction) -> List[Tuple[GridPoint, GridPoint]]:
    """The four moves of one round in their legal order"""
    ex, ey = direction.vector
    e = GridPoint(x=ex, y=ey)
    p = GridPoint(x=-ey, y=ex)
    minus_p = GridPoint(x=ey, y=-ex)
    return [
        (center + e, center + e + e),
        (center + p, center + p + e),
        (center + minus_p, center + minus_p + e),
        (center - e, center),
    ]


def verify_infinite_grid_rounds(
    center: GridPoint,
    rounds: int,
    direction: Direction,
    move_order: Optional[Sequence[int]] = None,
) -> bool:
    """Simulate the diamond N(center) sliding rounds steps in one direction

    Args:
        center (GridPoint): center of the initial diamond
        rounds (int): number of rounds
        direction (Direction): the sliding direction
        move_order (Optional[Sequence[int]]): permutation of the four moves of
            a round, the default order is the legal one

    Returns:
        bool: True if every single move is to an adjacent free point and keeps
        the four robots in general position
    """
    if rounds < 1:
        raise ValueError(f"Invalid number of rounds {rounds}, expected at least 1")
    direction = Direction(direction)
    order = tuple(move_order) if move_order is not None else DEFAULT_MOVE_ORDER
    if sorted(order) != [0, 1, 2, 3]:
        raise ValueError(f"Invalid move order {order}, expected a permutation of 0..3")

    e = GridPoint(x=direction.vector[0], y=direction.vector[1])
    robots = [center + e, center + GridPoint(x=-e.y, y=e.x), center - e, center + GridPoint(x=e.y, y=-e.x)]
    if not _in_general_position(robots):
        return False

    for _ in range(rounds):
        moves = round_moves(center, direction)
        for i in order:
            source, target = moves[i]
            if source not in robots or target in robots:
                return False
            if infinite_grid_distance(source, target) != 1:
                return False
            robots = [target if r == source else r for r in robots]
            if not _in_general_position(robots):
                return False
        center = center + e
    return True
