from enum import Enum
from pathlib import Path
from typing import List, Optional, Tuple

from pydantic import root_validator, validator

from ..errors import CertificateError, GraphExprError, MobilityError
from ..graphs.distance import DistanceOracle, all_pairs_distances
from ..graphs.graph import Graph
from ..helpers import bits_of, mask_of
from ..models.datamodel import DataModel
from ..position.geodesics import GeodesicIndex
from ..settings import EXIT_ILLEGAL, EXIT_INCOMPLETE, EXIT_OK


class Configuration(DataModel):
    """Occupied vertices, robots are indistinguishable"""

    occupied: List[int]

    @validator("occupied")
    def check_distinct(cls, occupied):
        if len(set(occupied)) != len(occupied):
            raise ValueError("A vertex can hold at most one robot")
        return sorted(occupied)

    @classmethod
    def from_mask(cls, mask: int) -> "Configuration":
        return cls(occupied=bits_of(mask))

    @property
    def mask(self) -> int:
        return mask_of(self.occupied)

    def __len__(self) -> int:
        return len(self.occupied)


class Move(DataModel):
    """A robot steps from source to target"""

    source: int
    target: int

    @root_validator(skip_on_failure=True)
    def check_distinct(cls, values):
        if values["source"] == values["target"]:
            raise ValueError(f"A move needs two different vertices, got {values['source']}")
        return values


class FailureReason(str, Enum):
    TARGET_OCCUPIED = "target-occupied"
    NOT_ADJACENT = "not-adjacent"
    SOURCE_EMPTY = "source-empty"
    BREAKS_GENERAL_POSITION = "breaks-general-position"


class Schedule(DataModel):
    """Certificate of a robot traversal

    Attributes:
        graph (str): graph expression naming the graph
        initial (List[int]): ascending initial robot positions
        moves (List[Tuple[int, int]]): the moves as (from, to) pairs
        labels (Optional[List[str]]): vertex labels, informative only
    """

    graph: str
    initial: List[int]
    moves: List[Tuple[int, int]] = []
    labels: Optional[List[str]] = None

    @validator("initial")
    def sort_initial(cls, initial):
        return sorted(initial)

    @property
    def graph_expr(self) -> str:
        return self.graph

    @property
    def robots(self) -> int:
        return len(self.initial)

    @property
    def configuration(self) -> Configuration:
        return Configuration(occupied=self.initial)

    def move_list(self) -> List[Move]:
        return [Move(source=a, target=b) for a, b in self.moves]

    @classmethod
    def from_file(cls, filename: str) -> "Schedule":
        try:
            return cls.parse(filename)
        except (OSError, ValueError, TypeError) as e:
            raise CertificateError(f"Invalid certificate '{filename}', got error '{e}'")

    def to_file(self, filename: str) -> str:
        path = Path(filename)
        return self.serialize(str(path.parent), path.name)


class TraversalReport(DataModel):
    """Outcome of replaying a schedule

    Attributes:
        valid (bool): all moves were legal
        covered (List[int]): vertices occupied at some moment, initial included
        order (int): number of vertices of the graph
        robots (int): number of robots
        failure_index (Optional[int]): index of the first illegal move
        failure_reason (Optional[FailureReason]): why that move is illegal
    """

    valid: bool
    covered: List[int]
    order: int
    robots: int = 0
    failure_index: Optional[int] = None
    failure_reason: Optional[FailureReason] = None

    @root_validator(skip_on_failure=True)
    def check_failure(cls, values):
        if values["valid"] and (
            values.get("failure_index") is not None
            or values.get("failure_reason") is not None
        ):
            raise ValueError("A valid traversal has no failure")
        return values

    @property
    def complete(self) -> bool:
        return len(self.covered) == self.order

    @property
    def exit_code(self) -> int:
        if not self.valid:
            return EXIT_ILLEGAL
        if not self.complete:
            return EXIT_INCOMPLETE
        return EXIT_OK


def _failure(
    index: GeodesicIndex, adjacency_masks: List[int], occupied: int, source: int, target: int
) -> Optional[FailureReason]:
    if not (occupied >> source) & 1:
        return FailureReason.SOURCE_EMPTY
    if not (adjacency_masks[source] >> target) & 1:
        return FailureReason.NOT_ADJACENT
    if (occupied >> target) & 1:
        return FailureReason.TARGET_OCCUPIED
    if not index.can_extend(occupied & ~(1 << source), target):
        return FailureReason.BREAKS_GENERAL_POSITION
    return None


def is_legal_move(d: DistanceOracle, c: Configuration, m: Move) -> bool:
    """True if the move keeps the robots in general position

    Args:
        d (DistanceOracle): distances of the graph
        c (Configuration): the robots before the move
        m (Move): the move

    Raises:
        MobilityError: if no robot sits on the source vertex

    Returns:
        bool: True if the target is adjacent and free and the new set is in general position
    """
    occupied = c.mask
    if not (occupied >> m.source) & 1:
        raise MobilityError(f"No robot on vertex {m.source}")
    if d.distance(m.source, m.target) != 1:
        return False
    if (occupied >> m.target) & 1:
        return False
    return GeodesicIndex(d).can_extend(occupied & ~(1 << m.source), m.target)


def verify_schedule(
    g: Graph, s: Schedule, d: Optional[DistanceOracle] = None
) -> TraversalReport:
    """Replay a schedule

    Replay stops at the first illegal move, the report then holds its index
    and reason. An initial set that is not in general position is reported
    as breaks-general-position without an index.

    Args:
        g (Graph): the graph the schedule should run on
        s (Schedule): the schedule
        d (Optional[DistanceOracle]): precomputed distances

    Raises:
        CertificateError: if the graph expression does not parse or does not
            describe g, or vertex ids are out of range or repeated

    Returns:
        TraversalReport: validity and coverage
    """
    from ..dsl.expr import build_graph_expr

    try:
        named = build_graph_expr(s.graph)
    except GraphExprError as e:
        raise CertificateError(f"Invalid graph expression in certificate, got error '{e}'")
    if not named.same_structure(g):
        raise CertificateError(f"The certificate graph '{s.graph}' does not match {g.name}")

    for v in s.initial + [v for move in s.moves for v in move]:
        if not 0 <= v < g.order:
            raise CertificateError(f"Vertex {v} does not exist in {g.name}")
    if len(set(s.initial)) != len(s.initial):
        raise CertificateError("The initial configuration repeats a vertex")

    if d is None:
        d = all_pairs_distances(g)
    index = GeodesicIndex(d)
    occupied = mask_of(s.initial)
    covered = occupied
    robots = len(s.initial)

    if not index.is_general_position(occupied):
        return TraversalReport(
            valid=False,
            covered=bits_of(covered),
            order=g.order,
            robots=robots,
            failure_reason=FailureReason.BREAKS_GENERAL_POSITION,
        )

    adjacency_masks = g.neighbor_masks
    for i, (source, target) in enumerate(s.moves):
        reason = _failure(index, adjacency_masks, occupied, source, target)
        if reason is not None:
            return TraversalReport(
                valid=False,
                covered=bits_of(covered),
                order=g.order,
                robots=robots,
                failure_index=i,
                failure_reason=reason,
            )
        occupied = (occupied & ~(1 << source)) | (1 << target)
        covered |= occupied

    return TraversalReport(valid=True, covered=bits_of(covered), order=g.order, robots=robots)
