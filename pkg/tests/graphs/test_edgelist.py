import pytest

from mobgp.errors import EdgeListError
from mobgp.graphs.edgelist import format_edge_list, parse_edge_list, quote, unquote


class TestEdgeList:
    def test_parse(self):
        assert parse_edge_list("3 2\n0 1\n1 2\n") == (3, [(0, 1), (1, 2)])

    def test_parse_comments_and_semicolons(self):
        text = "# a triangle\n3 3;0 1\n# closing edge\n1 2;2 0"
        assert parse_edge_list(text) == (3, [(0, 1), (1, 2), (2, 0)])

    def test_format(self):
        assert format_edge_list(3, [(0, 1), (1, 2)], separator=";") == "3 2;0 1;1 2"

    @pytest.mark.parametrize(
        "text,line",
        [
            ("3\n0 1", 1),
            ("3 1\n0 x", 2),
            ("3 1\n0 3", 2),
            ("3 1\n1 1", 2),
        ],
    )
    def test_malformed_lines(self, text, line):
        with pytest.raises(EdgeListError) as e:
            parse_edge_list(text)
        assert e.value.line == line

    def test_count_mismatch(self):
        with pytest.raises(EdgeListError):
            parse_edge_list("3 2\n0 1")
        with pytest.raises(EdgeListError):
            parse_edge_list("3 2\n0 1\n1 0")
        with pytest.raises(EdgeListError):
            parse_edge_list("# nothing")

    def test_quote(self):
        text = 'a "b"\nc\\d'
        assert unquote(quote(text)) == text
        assert quote("3 0") == '"3 0"'
