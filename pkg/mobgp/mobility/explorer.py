from collections import deque
from typing import List, Optional

from ..errors import MobilityError
from ..graphs.distance import DistanceOracle
from ..graphs.graph import Graph
from ..helpers import bits_of
from ..models.datamodel import DataModel
from ..settings import ORACLE_THRESHOLD
from .configuration import Configuration, Schedule
from .space import ConfigurationSpace, move_between, path_to


class ConfigurationComponent(DataModel):
    """Size and coverage of a connected component of the configuration graph"""

    size: int
    covered: List[int]


def _checked_start(space: ConfigurationSpace, s: Configuration) -> int:
    start = s.mask
    if start >> space.graph.order:
        raise MobilityError(f"Configuration {s.occupied} has vertices outside {space.graph.name}")
    if not space.index.is_general_position(start):
        raise MobilityError(f"Configuration {s.occupied} is not in general position")
    return start


def _require_connected(g: Graph):
    if not g.is_connected():
        raise MobilityError(f"Mobility is only defined for connected graphs, {g.name} is not")


def configuration_component(
    g: Graph, start: Configuration, d: Optional[DistanceOracle] = None
) -> ConfigurationComponent:
    """All configurations reachable from start by legal moves

    Raises:
        MobilityError: if start is not in general position

    Returns:
        ConfigurationComponent: number of configurations and covered vertices
    """
    space = ConfigurationSpace(g, d)
    parents, covered = space.explore(_checked_start(space, start))
    return ConfigurationComponent(size=len(parents), covered=bits_of(covered))


def is_mobile_gp_set(g: Graph, s: Configuration, d: Optional[DistanceOracle] = None) -> bool:
    """True if robots on s can visit every vertex by legal moves

    Raises:
        MobilityError: if g is disconnected or s is not in general position
    """
    _require_connected(g)
    space = ConfigurationSpace(g, d)
    _, covered = space.explore(_checked_start(space, s), stop_when_covered=True)
    return covered == space.full


def naive_mobile_oracle(
    g: Graph,
    s: Configuration,
    d: Optional[DistanceOracle] = None,
    threshold: int = ORACLE_THRESHOLD,
) -> bool:
    """Mobility by search over (occupied, visited) states

    Independent of the component characterization, exponential in the order.

    Raises:
        MobilityError: if the graph has more than threshold vertices or s is not in general position
    """
    if g.order > threshold:
        raise MobilityError(
            f"The naive oracle handles at most {threshold} vertices, {g.name} has {g.order}"
        )
    space = ConfigurationSpace(g, d)
    start = _checked_start(space, s)
    initial = (start, start)
    seen = {initial}
    queue = deque([initial])
    while queue:
        occupied, visited = queue.popleft()
        if visited == space.full:
            return True
        for _, _, nxt in space.legal_moves(occupied):
            state = (nxt, visited | nxt)
            if state not in seen:
                seen.add(state)
                queue.append(state)
    return False


def extract_witness(space: ConfigurationSpace, start: int) -> List[tuple]:
    """Moves of a traversal from start that visits every vertex

    For every vertex not yet covered, in ascending order, walk along the BFS
    tree to the first configuration that contains it and walk back.

    Raises:
        MobilityError: if start is not mobile
    """
    parents, covered = space.explore(start, stop_when_covered=True)
    if covered != space.full:
        raise MobilityError("The configuration is not a mobile general position set")

    # first configuration (in BFS order) holding each vertex
    holder = {}
    held = 0
    for configuration in parents:
        for v in bits_of(configuration & ~held):
            holder[v] = configuration
        held |= configuration

    moves = []
    visited = start
    for v in range(space.graph.order):
        if (visited >> v) & 1:
            continue
        path = path_to(parents, holder[v])
        for a, b in zip(path, path[1:]):
            moves.append(move_between(a, b))
            visited |= b
        for a, b in zip(reversed(path), list(reversed(path))[1:]):
            moves.append(move_between(a, b))
    return moves


def extract_witness_schedule(
    g: Graph, s: Configuration, d: Optional[DistanceOracle] = None
) -> Schedule:
    """A verifier valid and complete schedule starting from s

    Raises:
        MobilityError: if s is not a mobile general position set
    """
    _require_connected(g)
    space = ConfigurationSpace(g, d)
    start = _checked_start(space, s)
    return Schedule(
        graph=g.name,
        initial=bits_of(start),
        moves=extract_witness(space, start),
        labels=g.label_texts() if g.labels is not None else None,
    )
