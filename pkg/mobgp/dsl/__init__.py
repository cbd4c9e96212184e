from .expr import ExprNode, GraphExpr, NodeKind, build_graph_expr, parse_graph_expr
