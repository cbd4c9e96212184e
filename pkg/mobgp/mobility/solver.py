"""
Exact mobile general position number

For k from min(max_k, gp) down to min_k every general position set of size k
is a potential seed. A seed is mobile iff the occupied vertices over its
component of the configuration graph cover the graph. Components partition
the configurations, so every configuration of a failed component is skipped
as a later seed of the same k.
"""
import logging
import threading
import time
from typing import Dict, List, Optional, Set

from pydantic import validator

from ..errors import MobilityError, SearchTimeout
from ..graphs.distance import DistanceOracle, all_pairs_distances
from ..graphs.graph import Graph
from ..helpers import bits_of, inverse_permutation, permute_mask
from ..models.datamodel import DataModel
from ..position.solvers import gp_number, iter_gp_masks
from .configuration import Schedule
from .explorer import extract_witness
from .space import ConfigurationSpace

logger = logging.getLogger(__name__)


class MobOptions(DataModel):
    """Options of the mob search

    Attributes:
        max_k (Optional[int]): largest number of robots to try, gp(g) if None
        min_k (int): smallest number of robots to try
        time_limit (Optional[float]): wall time limit in seconds
        use_symmetry (bool): reduce seeds with the symmetry hints of the graph
        threads (int): number of seeds explored in parallel
    """

    max_k: Optional[int] = None
    min_k: int = 1
    time_limit: Optional[float] = None
    use_symmetry: bool = True
    threads: int = 1

    @validator("min_k", "threads")
    def check_positive(cls, value):
        if value < 1:
            raise ValueError(f"Expected a value of at least 1, got {value}")
        return value


class KDiagnostics(DataModel):
    k: int
    gp_sets: int = 0
    skipped_by_symmetry: int = 0
    components: int = 0
    decided: bool = False
    mobile: bool = False


class MobReport(DataModel):
    """Outcome of the mob search

    If the search was cut off the value is None and mob lies in [lower, upper].

    Attributes:
        graph (str): name of the graph
        value (Optional[int]): mob(g) if decided
        decided (bool): True if value is exact
        lower (int): proven lower bound
        upper (int): proven upper bound
        witness (Optional[Schedule]): valid and complete schedule with value robots
        per_k (List[KDiagnostics]): one entry per k tried, descending
        explored (int): number of configurations explored
        elapsed_ms (float): wall time
    """

    graph: str
    value: Optional[int] = None
    decided: bool = False
    lower: int
    upper: int
    witness: Optional[Schedule] = None
    per_k: List[KDiagnostics] = []
    explored: int = 0
    elapsed_ms: float = 0.0


class _SymmetryReducer:
    """Greedy lexicographic minimization under hint generators and their inverses"""

    def __init__(self, hints: List[List[int]]):
        self.generators = []
        for hint in hints:
            self.generators.append(hint)
            inverse = inverse_permutation(hint)
            if inverse != hint:
                self.generators.append(inverse)

    def minimize(self, mask: int) -> int:
        current, key = mask, bits_of(mask)
        improved = True
        while improved:
            improved = False
            for generator in self.generators:
                candidate = permute_mask(current, generator)
                candidate_key = bits_of(candidate)
                if candidate_key < key:
                    current, key = candidate, candidate_key
                    improved = True
        return current

    def is_representative(self, mask: int) -> bool:
        return self.minimize(mask) == mask


class _SeedWorker(threading.Thread):
    def __init__(self, space: ConfigurationSpace, seed: int, deadline: Optional[float]):
        super().__init__()
        self.space = space
        self.seed = seed
        self.deadline = deadline
        self.component: Dict[int, Optional[int]] = {}
        self.mobile = False
        self.error: Optional[Exception] = None

    def run(self):
        try:
            self.component, covered = self.space.explore(
                self.seed, deadline=self.deadline, stop_when_covered=True
            )
            self.mobile = covered == self.space.full
        except Exception as e:
            self.error = e


def _explore_batch(
    space: ConfigurationSpace, seeds: List[int], deadline: Optional[float]
) -> List[_SeedWorker]:
    workers = [_SeedWorker(space, seed, deadline) for seed in seeds]
    if len(workers) == 1:
        workers[0].run()
    else:
        for worker in workers:
            worker.start()
        for worker in workers:
            worker.join()
    for worker in workers:
        if worker.error is not None:
            raise worker.error
    return workers


def mob_number(
    g: Graph,
    options: Optional[MobOptions] = None,
    d: Optional[DistanceOracle] = None,
) -> MobReport:
    """Exact mobile general position number of a connected graph

    Seeds are handled in lexicographic order in batches of options.threads,
    the first mobile seed in that order is reported so the result does not
    depend on the number of threads.

    Args:
        g (Graph): a connected graph
        options (Optional[MobOptions]): search options
        d (Optional[DistanceOracle]): precomputed distances

    Raises:
        MobilityError: if g is disconnected

    Returns:
        MobReport: the value and witness, or proven bounds when the time limit passed
    """
    if options is None:
        options = MobOptions()
    if not g.is_connected():
        raise MobilityError(f"Mobility is only defined for connected graphs, {g.name} is not")

    start = time.monotonic()
    deadline = start + options.time_limit if options.time_limit is not None else None
    if d is None:
        d = all_pairs_distances(g)
    space = ConfigurationSpace(g, d)
    reducer = (
        _SymmetryReducer(g.symmetry_hints)
        if options.use_symmetry and len(g.symmetry_hints) > 0
        else None
    )

    gp = gp_number(g, d).value
    top = gp if options.max_k is None else min(options.max_k, gp)
    report = MobReport(graph=g.name, lower=1, upper=top)

    def finish() -> MobReport:
        report.elapsed_ms = (time.monotonic() - start) * 1000.0
        return report

    for k in range(top, options.min_k - 1, -1):
        logger.info(f"Searching {g.name} for a mobile general position set of size {k}")
        diagnostics = KDiagnostics(k=k)
        report.per_k.append(diagnostics)
        absorbed: Set[int] = set()
        batch: List[int] = []
        seeds = iter_gp_masks(space.index, k)

        try:
            while True:
                seed = next(seeds, None)
                if seed is not None:
                    diagnostics.gp_sets += 1
                    if seed in absorbed:
                        continue
                    if reducer is not None and not reducer.is_representative(seed):
                        diagnostics.skipped_by_symmetry += 1
                        continue
                    batch.append(seed)
                    if len(batch) < options.threads:
                        continue
                if len(batch) == 0:
                    break
                if deadline is not None and time.monotonic() > deadline:
                    raise SearchTimeout(f"Deadline passed at k={k}")

                for worker in _explore_batch(space, batch, deadline):
                    diagnostics.components += 1
                    report.explored += len(worker.component)
                    if worker.mobile:
                        logger.debug(f"Seed {bits_of(worker.seed)} is mobile")
                        diagnostics.decided = diagnostics.mobile = True
                        report.value = report.lower = report.upper = k
                        report.decided = True
                        report.witness = Schedule(
                            graph=g.name,
                            initial=bits_of(worker.seed),
                            moves=extract_witness(space, worker.seed),
                            labels=g.label_texts() if g.labels is not None else None,
                        )
                        logger.info(f"mob({g.name}) = {k}")
                        return finish()
                    absorbed.update(worker.component)
                batch = []
                if seed is None:
                    break
        except SearchTimeout:
            logger.warning(f"Time limit passed for {g.name} at k={k}, mob lies in [1, {k}]")
            report.upper = k
            return finish()

        diagnostics.decided = True
        report.upper = k - 1
        logger.info(
            f"No mobile general position set of size {k} in {g.name} "
            f"({diagnostics.gp_sets} set(s), {diagnostics.components} component(s))"
        )

    # every k down to min_k failed, the value is below the floor
    return finish()
