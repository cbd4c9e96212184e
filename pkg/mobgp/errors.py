"""
Error definitions for mobgp.
"""
from typing import List


class MobgpError(Exception):
    """Base mobgp Exception class."""


class GraphError(MobgpError):
    """Invalid graph construction or a graph that does not meet a requirement."""


class EdgeListError(GraphError):
    """Malformed edge list text."""

    def __init__(self, message: str, line: int = 0):
        self.line = line
        super().__init__(f"line {line}: {message}" if line > 0 else message)


class GraphExprError(MobgpError):
    """Graph expression that cannot be turned into a graph.

    Args:
        message (str): the reason
        offset (int): 0-based offset in the source text
        expected (List[str]): tokens that would have been accepted at offset
    """

    def __init__(self, message: str, offset: int, expected: List[str] = []):
        self.message = message
        self.offset = offset
        self.expected = sorted(expected)
        text = f"{message} at position {self.position}"
        if len(self.expected) > 0:
            text += f", expected one of {', '.join(repr(e) for e in self.expected)}"
        super().__init__(text)

    @property
    def position(self) -> int:
        """1-based column of the error"""
        return self.offset + 1


class ParseError(GraphExprError):
    """Syntax error in a graph expression."""


class PositionError(MobgpError):
    """Precondition failure of a general position predicate or solver."""


class MobilityError(MobgpError):
    """Precondition failure of a configuration, move or mobility search."""


class CertificateError(MobgpError):
    """Malformed schedule certificate."""


class SearchTimeout(MobgpError):
    """The search deadline has passed."""
