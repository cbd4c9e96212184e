import abc
import logging
from typing import List

from pydantic import BaseModel

from ..errors import CertificateError, GraphError, GraphExprError
from ..graphs.graph import Graph
from ..mobility.configuration import Schedule, verify_schedule

logger = logging.getLogger(__name__)


class ScheduleExecutionError(Exception):
    pass


class ScheduleInputCheckError(Exception):
    pass


def check_named(g: Graph):
    """Raise if the name of g is not a graph expression describing g"""
    from ..dsl.expr import build_graph_expr

    try:
        named = build_graph_expr(g.name)
    except GraphExprError as e:
        raise GraphError(f"The graph name '{g.name}' is not a graph expression, got error '{e}'")
    if not named.same_structure(g):
        raise GraphError(f"The graph name '{g.name}' does not describe the graph")


class ScheduleAlgorithm(BaseModel, metaclass=abc.ABCMeta):
    """Base class for all schedule generators and transformers

    You will need to implement _check_input, _target_graph and _execute.
    Every schedule is replayed by the verifier before it is returned.
    """

    log: List[str] = []

    def execute(self) -> Schedule:
        try:
            self._check_input()
        except Exception as e:
            raise ScheduleInputCheckError(
                f"Could not execute algorithm, got error '{e}'"
            )

        target = self._target_graph()
        schedule = self._execute(target)

        try:
            report = verify_schedule(target, schedule)
        except CertificateError as e:
            raise ScheduleExecutionError(f"Generated an invalid certificate, got error '{e}'")
        if not report.valid:
            reason = report.failure_reason.value if report.failure_reason else "unknown"
            raise ScheduleExecutionError(
                f"Generated schedule for {target.name} has an illegal move at index {report.failure_index} ({reason})"
            )
        if not report.complete:
            raise ScheduleExecutionError(
                f"Generated schedule for {target.name} covers {len(report.covered)} of {target.order} vertices"
            )
        logger.debug(
            f"{self.__class__.__name__}: {schedule.robots} robot(s), {len(schedule.moves)} move(s) on {target.name}"
        )
        return schedule

    def _add_log(self, message: str):
        self.log.append(message)
        logger.debug(message)

    @abc.abstractmethod
    def _check_input(self):
        raise NotImplementedError

    @abc.abstractmethod
    def _target_graph(self) -> Graph:
        raise NotImplementedError

    @abc.abstractmethod
    def _execute(self, target: Graph) -> Schedule:
        raise NotImplementedError
