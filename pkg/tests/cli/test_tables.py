import pytest

from mobgp.cli.tables import (
    TABLE_NAMES,
    TableRow,
    compute_row,
    run_table,
    table_rows,
)


class TestTables:
    def test_names(self):
        assert TABLE_NAMES == ["hamming", "grids", "prisms", "cylinders", "corona", "joins", "all"]

    def test_prism_rows(self):
        rows = table_rows("prisms")
        assert [row.expected for row in rows] == [3, 2, 4, 4, 4, 4]
        assert rows[0].display == "mob(cartesian(cycle(3),complete(2)))"

    def test_stretch_rows(self):
        assert len(table_rows("cylinders")) == 2
        assert len(table_rows("cylinders", stretch=True)) == 4
        assert all(not row.stretch for row in table_rows("all"))

    def test_all(self):
        rows = table_rows("all")
        names = {row.display for row in rows}
        assert "gp(petersen)" in names
        assert "mob(cartesian(cycle(5),complete(2)))" in names

    def test_unknown_table(self):
        with pytest.raises(ValueError):
            table_rows("tori")

    def test_run_prisms(self):
        report = run_table("prisms")
        assert report.all_match
        assert [row.computed for row in report.rows] == [3, 2, 4, 4, 4, 4]

    def test_deterministic_apart_from_time(self):
        first = run_table("joins")
        second = run_table("joins", threads=2)
        assert [r.dict(exclude={"elapsed_ms"}) for r in first.rows] == [
            r.dict(exclude={"elapsed_ms"}) for r in second.rows
        ]

    def test_infinite_grid_row(self):
        row = TableRow(expression="25", quantity="infinite_grid_rounds", expected=1)
        assert compute_row(row) == 1

    def test_quantities(self):
        assert compute_row(TableRow(expression="petersen", quantity="gp", expected=6)) == 6
        assert compute_row(TableRow(expression="cycle(8)", quantity="gpo", expected=2)) == 2
        row = TableRow(expression="cartesian(complete(3),complete(3))", quantity="gp_sets", expected=9)
        assert compute_row(row) == 9

    def test_mob_cut_off(self):
        row = TableRow(expression="petersen", expected=4)
        assert compute_row(row, time_limit=0.0) is None

    def test_unknown_quantity(self):
        with pytest.raises(ValueError):
            compute_row(TableRow(expression="petersen", quantity="diameter", expected=2))

    def test_mismatch(self, monkeypatch):
        from mobgp.cli import tables

        monkeypatch.setitem(
            tables.TABLES, "prisms", [TableRow(expression="cartesian(cycle(4),complete(2))", expected=3)]
        )
        report = run_table("prisms")
        assert not report.all_match
        assert report.rows[0].computed == 2
