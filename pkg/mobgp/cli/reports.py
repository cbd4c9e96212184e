"""
Rendering of reports as text, json or csv

The field names are the same in every format: value, witness, covered,
per_k and elapsed_ms.
"""
from enum import Enum
from typing import List, Optional, Union

import pandas as pd
import simplejson as json

from ..graphs.graph import Graph
from ..mobility.configuration import Schedule, TraversalReport
from ..mobility.solver import MobReport
from ..position.solvers import PositionReport
from ..settings import TABLE_COLUMNS
from .tables import TableReport


class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"
    CSV = "csv"


Report = Union[PositionReport, MobReport, TraversalReport, Schedule, TableReport]


def _labels(vertices: List[int], graph: Optional[Graph]) -> List[str]:
    if graph is None:
        return [str(v) for v in vertices]
    return graph.label_texts(vertices)


def _csv(frame: pd.DataFrame) -> str:
    return frame.to_csv(index=False, lineterminator="\n")


def _position_frame(report: PositionReport, graph: Optional[Graph]) -> pd.DataFrame:
    return pd.DataFrame(
        [
            {
                "value": report.value,
                "witness": " ".join(_labels(report.witness, graph)),
                "explored": report.explored,
                "elapsed_ms": round(report.elapsed_ms, 3),
            }
        ]
    )


def _mob_frame(report: MobReport, graph: Optional[Graph]) -> pd.DataFrame:
    witness = report.witness.initial if report.witness is not None else []
    return pd.DataFrame(
        [
            {
                "value": report.value,
                "decided": report.decided,
                "lower": report.lower,
                "upper": report.upper,
                "witness": " ".join(_labels(witness, graph)),
                "moves": len(report.witness.moves) if report.witness is not None else 0,
                "explored": report.explored,
                "elapsed_ms": round(report.elapsed_ms, 3),
            }
        ]
    )


def _traversal_frame(report: TraversalReport, graph: Optional[Graph]) -> pd.DataFrame:
    return pd.DataFrame(
        [
            {
                "valid": report.valid,
                "complete": report.complete,
                "covered": len(report.covered),
                "order": report.order,
                "robots": report.robots,
                "failure_index": report.failure_index,
                "failure_reason": report.failure_reason.value if report.failure_reason else None,
            }
        ]
    )


def _table_frame(report: TableReport) -> pd.DataFrame:
    frame = pd.DataFrame([row.dict() for row in report.rows], columns=TABLE_COLUMNS)
    frame["elapsed_ms"] = frame["elapsed_ms"].round(3)
    return frame


def _text(report: Report, graph: Optional[Graph], quantity: str) -> str:
    if isinstance(report, PositionReport):
        return "\n".join(
            [
                f"{quantity} = {report.value}",
                f"witness: {' '.join(_labels(report.witness, graph))}",
                f"elapsed_ms: {report.elapsed_ms:.3f}",
            ]
        )

    if isinstance(report, MobReport):
        if report.decided:
            lines = [f"mob = {report.value}"]
        else:
            lines = [f"mob ∈ [{report.lower}, {report.upper}]"]
        if report.witness is not None:
            lines.append(f"witness: {' '.join(_labels(report.witness.initial, graph))}")
            lines.append(f"moves: {len(report.witness.moves)}")
        lines.append("per_k:")
        for d in report.per_k:
            state = "mobile" if d.mobile else ("none" if d.decided else "undecided")
            lines.append(
                f"  k={d.k} gp_sets={d.gp_sets} skipped_by_symmetry={d.skipped_by_symmetry} "
                f"components={d.components} {state}"
            )
        lines.append(f"elapsed_ms: {report.elapsed_ms:.3f}")
        return "\n".join(lines)

    if isinstance(report, TraversalReport):
        lines = [
            f"valid: {str(report.valid).lower()}",
            f"covered: {len(report.covered)}/{report.order}",
            f"robots: {report.robots}",
        ]
        if not report.valid:
            index = report.failure_index if report.failure_index is not None else "initial"
            lines.append(f"failure: {index} {report.failure_reason.value}")
        elif not report.complete:
            missing = sorted(set(range(report.order)) - set(report.covered))
            lines.append(f"missing: {' '.join(_labels(missing, graph))}")
        return "\n".join(lines)

    if isinstance(report, Schedule):
        return "\n".join(
            [
                f"graph: {report.graph}",
                f"robots: {report.robots}",
                f"initial: {' '.join(_labels(report.initial, graph))}",
                f"moves: {len(report.moves)}",
            ]
        )

    return _table_frame(report).to_string(index=False)


def emit_report(
    report: Report,
    format: OutputFormat = OutputFormat.TEXT,
    graph: Optional[Graph] = None,
    quantity: str = "value",
) -> str:
    """Render a report

    Args:
        report (Report): the report
        format (OutputFormat): text, json or csv
        graph (Optional[Graph]): if given, vertices are printed with their labels in text and csv
        quantity (str): name of the computed value in text output (gp, gpo)

    Returns:
        str: the rendered report
    """
    format = OutputFormat(format)
    if format == OutputFormat.JSON:
        return json.dumps(report.dict(exclude_none=True), indent=2)

    if format == OutputFormat.TEXT:
        return _text(report, graph, quantity)

    if isinstance(report, PositionReport):
        return _csv(_position_frame(report, graph))
    if isinstance(report, MobReport):
        return _csv(_mob_frame(report, graph))
    if isinstance(report, TraversalReport):
        return _csv(_traversal_frame(report, graph))
    if isinstance(report, Schedule):
        frame = pd.DataFrame(report.moves, columns=["from", "to"])
        return _csv(frame)
    return _csv(_table_frame(report))
