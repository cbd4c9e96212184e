"""
Graph expressions

Grammar (whitespace between tokens is ignored):

    expr    := atom | product
    product := ("cartesian" | "corona" | "join") "(" expr "," expr ")"
    atom    := name [ "(" int { "," int } ")" ] | ("graph" | "tree") "(" string ")"

Printing a parsed tree gives the canonical text, which is also the name of
the built graph.
"""
import re
from enum import IntEnum
from typing import List, Optional, Tuple

from pydantic import BaseModel

from ..errors import GraphError, GraphExprError, ParseError
from ..graphs.edgelist import quote, unquote
from ..graphs.families import EDGE_LIST_FAMILIES, FAMILIES, build_graph
from ..graphs.graph import Graph
from ..graphs.products import cartesian_product, corona_product, join

PRODUCTS = {"cartesian": cartesian_product, "corona": corona_product, "join": join}

TOKEN_PATTERN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<int>-?[0-9]+)
  | (?P<string>"(?:[^"\\]|\\.)*")
  | (?P<punct>[(),])
    """,
    re.VERBOSE,
)


class NodeKind(IntEnum):
    FAMILY = 0
    PRODUCT = 1
    EDGE_LIST = 2


class ExprNode(BaseModel):
    """Node of a parsed graph expression

    FAMILY nodes carry params, PRODUCT nodes two children and EDGE_LIST
    nodes the unquoted edge list text.
    """

    kind: NodeKind
    name: str
    params: List[int] = []
    children: List["ExprNode"] = []
    edges: Optional[str] = None
    offset: int = 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExprNode):
            return False
        return (
            self.kind == other.kind
            and self.name == other.name
            and self.params == other.params
            and self.edges == other.edges
            and self.children == other.children
        )

    def to_source(self) -> str:
        if self.kind == NodeKind.PRODUCT:
            left, right = self.children
            return f"{self.name}({left.to_source()},{right.to_source()})"
        if self.kind == NodeKind.EDGE_LIST:
            return f"{self.name}({quote(self.edges)})"
        if len(self.params) == 0:
            return self.name
        return f"{self.name}({','.join(str(p) for p in self.params)})"

    def build(self) -> Graph:
        try:
            if self.kind == NodeKind.PRODUCT:
                left, right = self.children
                return PRODUCTS[self.name](left.build(), right.build())
            if self.kind == NodeKind.EDGE_LIST:
                return build_graph(self.name, edges=self.edges)
            return build_graph(self.name, self.params)
        except GraphExprError:
            raise
        except GraphError as e:
            raise GraphExprError(str(e), self.offset)


ExprNode.update_forward_refs()


class GraphExpr(BaseModel):
    source: str
    parsed: ExprNode

    def to_source(self) -> str:
        return self.parsed.to_source()

    def build(self) -> Graph:
        return self.parsed.build()


class _Token(BaseModel):
    kind: str
    text: str
    offset: int


def _tokenize(source: str) -> List[_Token]:
    tokens = []
    pos = 0
    while pos < len(source):
        match = TOKEN_PATTERN.match(source, pos)
        if match is None:
            raise ParseError(f"unexpected character {source[pos]!r}", pos)
        kind = match.lastgroup
        if kind != "ws":
            text = match.group()
            tokens.append(_Token(kind=text if kind == "punct" else kind, text=text, offset=pos))
        pos = match.end()
    tokens.append(_Token(kind="end", text="", offset=len(source)))
    return tokens


class _Parser:
    def __init__(self, source: str):
        self.source = source
        self.tokens = _tokenize(source)
        self.pos = 0

    @property
    def current(self) -> _Token:
        return self.tokens[self.pos]

    def expect(self, *kinds: str) -> _Token:
        token = self.current
        if token.kind not in kinds:
            found = "end of input" if token.kind == "end" else repr(token.text)
            raise ParseError(f"unexpected {found}", token.offset, list(kinds))
        self.pos += 1
        return token

    def parse(self) -> ExprNode:
        node = self.parse_expr()
        self.expect("end")
        return node

    def parse_expr(self) -> ExprNode:
        token = self.expect("name")
        name = token.text
        if name in PRODUCTS:
            self.expect("(")
            left = self.parse_expr()
            self.expect(",")
            right = self.parse_expr()
            self.expect(")")
            return ExprNode(
                kind=NodeKind.PRODUCT, name=name, children=[left, right], offset=token.offset
            )
        if name in EDGE_LIST_FAMILIES:
            self.expect("(")
            text = unquote(self.expect("string").text)
            self.expect(")")
            return ExprNode(
                kind=NodeKind.EDGE_LIST, name=name, edges=text, offset=token.offset
            )
        if name in FAMILIES:
            params, offsets = self.parse_params()
            problem = FAMILIES[name].validate_params(params)
            if problem is not None:
                index, message = problem
                raise GraphExprError(message, token.offset if index < 0 else offsets[index])
            return ExprNode(kind=NodeKind.FAMILY, name=name, params=params, offset=token.offset)
        raise GraphExprError(
            f"unknown constructor '{name}'",
            token.offset,
            list(PRODUCTS) + list(EDGE_LIST_FAMILIES) + list(FAMILIES),
        )

    def parse_params(self) -> Tuple[List[int], List[int]]:
        if self.current.kind != "(":
            return [], []
        self.expect("(")
        params, offsets = [], []
        while True:
            token = self.expect("int")
            params.append(int(token.text))
            offsets.append(token.offset)
            if self.expect(",", ")").kind == ")":
                return params, offsets


def parse_graph_expr(source: str) -> GraphExpr:
    """Parse a graph expression

    Args:
        source (str): the expression text

    Raises:
        ParseError: on a syntax error, with offset and expected tokens
        GraphExprError: on an unknown constructor, arity mismatch or
            out of range parameter

    Returns:
        GraphExpr: the source and its parse tree
    """
    return GraphExpr(source=source, parsed=_Parser(source).parse())


def build_graph_expr(source: str) -> Graph:
    """Parse and build a graph expression"""
    return parse_graph_expr(source).build()
