"""
Reading and writing the edge list text format

The first line holds "n m", followed by m lines "u v" with 0-based vertex
ids. Lines starting with '#' are comments. Inside graph expressions the
lines may also be separated by ';'.
"""
import re
from typing import List, Tuple

from ..errors import EdgeListError


def parse_edge_list(text: str) -> Tuple[int, List[Tuple[int, int]]]:
    """Parse an edge list

    Args:
        text (str): the edge list text

    Raises:
        EdgeListError: on any malformed line or count mismatch

    Returns:
        Tuple[int, List[Tuple[int, int]]]: the order and the edges
    """
    lines = []
    for i, line in enumerate(re.split(r"[\n;]", text), start=1):
        line = line.strip()
        if line == "" or line.startswith("#"):
            continue
        lines.append((i, line))

    if len(lines) == 0:
        raise EdgeListError("missing header line 'n m'")

    lineno, header = lines[0]
    try:
        n, m = [int(p) for p in header.split()]
    except ValueError:
        raise EdgeListError(f"invalid header '{header}', expected 'n m'", lineno)
    if n < 1 or m < 0:
        raise EdgeListError(f"invalid header '{header}'", lineno)

    edges = []
    for lineno, line in lines[1:]:
        try:
            u, v = [int(p) for p in line.split()]
        except ValueError:
            raise EdgeListError(f"invalid edge '{line}', expected 'u v'", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListError(f"edge '{line}' refers to a non existing vertex", lineno)
        if u == v:
            raise EdgeListError(f"loop at vertex {u}", lineno)
        edges.append((u, v))

    if len(edges) != m:
        raise EdgeListError(f"header announces {m} edge(s) but got {len(edges)}")
    if len(set((min(e), max(e)) for e in edges)) != m:
        raise EdgeListError("duplicate edge")
    return n, edges


def format_edge_list(order: int, edges: List[Tuple[int, int]], separator: str = "\n") -> str:
    lines = [f"{order} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return separator.join(lines)


def quote(text: str) -> str:
    """Quote an edge list for use inside a graph expression"""
    escaped = text.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n")
    return f'"{escaped}"'


def unquote(token: str) -> str:
    """Inverse of quote, the token includes the surrounding quotes"""
    result = []
    i = 1
    while i < len(token) - 1:
        c = token[i]
        if c == "\\" and i + 1 < len(token) - 1:
            nxt = token[i + 1]
            result.append("\n" if nxt == "n" else nxt)
            i += 2
        else:
            result.append(c)
            i += 1
    return "".join(result)
