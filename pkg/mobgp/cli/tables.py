"""
Regression tables of known exact values
"""
import logging
import time
from typing import Dict, List, Optional

from pydantic import BaseModel

from ..dsl.expr import build_graph_expr
from ..graphs.distance import GridPoint
from ..mobility.infinite_grid import Direction, verify_infinite_grid_rounds
from ..mobility.solver import MobOptions, mob_number
from ..position.solvers import enumerate_gp_sets, gp_number, gpo_number

logger = logging.getLogger(__name__)

QUANTITIES = ("mob", "gp", "gpo", "gp_sets", "infinite_grid_rounds")

INFINITE_GRID_ROUNDS = 25
INFINITE_GRID_CENTERS = [GridPoint(x=0, y=0), GridPoint(x=5, y=-3), GridPoint(x=-7, y=11)]


class TableRow(BaseModel):
    """One known value

    For infinite_grid_rounds the expression is the number of rounds and the
    expected value 1 means every simulation succeeds.
    """

    expression: str
    quantity: str = "mob"
    expected: int
    stretch: bool = False
    min_k: int = 1

    @property
    def display(self) -> str:
        return f"{self.quantity}({self.expression})"


class TableResult(BaseModel):
    expression: str
    expected: int
    computed: Optional[int] = None
    match: bool = False
    elapsed_ms: float = 0.0


class TableReport(BaseModel):
    name: str
    rows: List[TableResult] = []

    @property
    def all_match(self) -> bool:
        return all(row.match for row in self.rows)


def _tree(edges: List[tuple]) -> str:
    order = max(max(e) for e in edges) + 1
    lines = [f"{order} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return 'tree("' + ";".join(lines) + '")'


# (leaf count, tree)
TREES = [
    (3, _tree([(0, 1), (0, 2), (0, 3)])),
    # spider with legs of length 2, 1 and 1
    (3, _tree([(0, 1), (1, 2), (0, 3), (0, 4)])),
    (4, _tree([(0, 1), (0, 2), (0, 3), (0, 4)])),
    (4, _tree([(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])),
    (5, _tree([(0, 1), (0, 2), (0, 3), (3, 4), (3, 5), (3, 6)])),
]


def _hamming_rows() -> List[TableRow]:
    rows = [
        TableRow(expression=f"cartesian(complete({r}),path({s}))", expected=r)
        for r, s in [(2, 3), (3, 3), (3, 4), (4, 3)]
    ]
    rows += [
        TableRow(expression=f"cartesian(complete({n}),complete({m}))", expected=n + m - 3)
        for n, m in [(3, 3), (4, 3), (4, 4)]
    ]
    rows += [
        TableRow(expression=f"cartesian(complete({n}),complete(2))", expected=n)
        for n in [3, 4, 5]
    ]
    for n in range(3, 6):
        for m in range(3, n + 1):
            expression = f"cartesian(complete({n}),complete({m}))"
            rows.append(TableRow(expression=expression, quantity="gp", expected=n + m - 2))
            # one maximum set per vertex: its row and column without the vertex itself
            rows.append(TableRow(expression=expression, quantity="gp_sets", expected=n * m))
    rows.append(TableRow(expression="cartesian(star(3),star(3))", expected=4))
    rows.append(TableRow(expression="cartesian(star(3),star(3))", quantity="gp", expected=6))
    return rows


def _grid_rows() -> List[TableRow]:
    rows = [
        TableRow(expression=f"cartesian(path({n}),path({m}))", expected=3)
        for n, m in [(3, 3), (3, 4), (4, 4), (4, 5)]
    ]
    rows += [
        TableRow(expression=f"cartesian({tree},complete(2))", expected=leaves)
        for leaves, tree in TREES
    ]
    rows.append(
        TableRow(
            expression=str(INFINITE_GRID_ROUNDS), quantity="infinite_grid_rounds", expected=1
        )
    )
    return rows


def _prism_rows() -> List[TableRow]:
    expected = {3: 3, 4: 2, 5: 4, 6: 4, 7: 4, 8: 4}
    return [
        TableRow(expression=f"cartesian(cycle({n}),complete(2))", expected=value)
        for n, value in expected.items()
    ]


def _cylinder_rows() -> List[TableRow]:
    return [
        TableRow(expression="cartesian(cycle(4),path(3))", expected=3),
        TableRow(expression="cartesian(cycle(4),path(4))", expected=3),
        TableRow(expression="cartesian(cycle(9),cycle(8))", expected=7, stretch=True, min_k=7),
        TableRow(expression="cartesian(cycle(11),path(5))", quantity="gp", expected=5, stretch=True),
    ]


def _corona_rows() -> List[TableRow]:
    rows = [
        TableRow(expression=f"corona(cycle({n}),complete(1))", expected=(n + 1) // 2 + 1)
        for n in range(3, 8)
    ]
    rows.append(TableRow(expression="corona(complete(2),cycle(4))", expected=3))
    rows += [
        TableRow(expression=f"corona(complete({r}),complete({s}))", expected=max(r, s + 1))
        for r, s in [(2, 2), (3, 2), (2, 3)]
    ]
    return rows


def _join_rows() -> List[TableRow]:
    return [
        TableRow(expression="join(cycle(4),complete(1))", expected=2),
        TableRow(expression="join(cycle(5),complete(1))", expected=3),
        TableRow(expression="join(cycle(6),complete(1))", expected=3),
        TableRow(expression="join(cycle(5),cycle(5))", expected=3),
        TableRow(expression="join(birdcage(3),complete(1))", expected=4),
        TableRow(expression="join(complete_minus_edge(4),complete_minus_edge(3))", expected=4),
        TableRow(expression="join(complete(2),complete_plus_leaf(3))", expected=3),
    ]


def _base_rows() -> List[TableRow]:
    return [
        TableRow(expression="petersen", quantity="gp", expected=6),
        TableRow(expression="petersen", expected=4),
        TableRow(expression=_tree([(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)]), quantity="gpo", expected=4),
        TableRow(expression="cycle(8)", quantity="gpo", expected=2),
        TableRow(expression="complete_bipartite(3,3)", quantity="gpo", expected=3),
    ]


TABLES: Dict[str, List[TableRow]] = {
    "hamming": _hamming_rows(),
    "grids": _grid_rows(),
    "prisms": _prism_rows(),
    "cylinders": _cylinder_rows(),
    "corona": _corona_rows(),
    "joins": _join_rows(),
}
TABLE_NAMES = list(TABLES) + ["all"]


def table_rows(name: str, stretch: bool = False) -> List[TableRow]:
    if name == "all":
        rows = [row for rows in TABLES.values() for row in rows] + _base_rows()
    elif name in TABLES:
        rows = TABLES[name]
    else:
        raise ValueError(f"Unknown table '{name}', expected one of {', '.join(TABLE_NAMES)}")
    return [row for row in rows if stretch or not row.stretch]


def _infinite_grid(rounds: int) -> int:
    for center in INFINITE_GRID_CENTERS:
        for direction in Direction:
            if not verify_infinite_grid_rounds(center, rounds, direction):
                return 0
    return 1


def compute_row(
    row: TableRow, threads: int = 1, time_limit: Optional[float] = None
) -> Optional[int]:
    """The computed value of a row, None if the mob search was cut off"""
    if row.quantity == "infinite_grid_rounds":
        return _infinite_grid(int(row.expression))

    g = build_graph_expr(row.expression)
    if row.quantity == "gp":
        return gp_number(g).value
    if row.quantity == "gpo":
        return gpo_number(g).value
    if row.quantity == "gp_sets":
        return sum(1 for _ in enumerate_gp_sets(g, gp_number(g).value))
    if row.quantity == "mob":
        options = MobOptions(min_k=row.min_k, threads=threads, time_limit=time_limit)
        return mob_number(g, options).value
    raise ValueError(f"Unknown quantity '{row.quantity}', expected one of {', '.join(QUANTITIES)}")


def run_table(
    name: str,
    stretch: bool = False,
    threads: int = 1,
    time_limit: Optional[float] = None,
) -> TableReport:
    """Compute every row of a table and compare with the expected values"""
    report = TableReport(name=name)
    for row in table_rows(name, stretch):
        start = time.monotonic()
        computed = compute_row(row, threads, time_limit)
        elapsed_ms = (time.monotonic() - start) * 1000.0
        match = computed == row.expected
        if not match:
            logger.warning(f"{row.display}: expected {row.expected}, computed {computed}")
        report.rows.append(
            TableResult(
                expression=row.display,
                expected=row.expected,
                computed=computed,
                match=match,
                elapsed_ms=elapsed_ms,
            )
        )
    return report
