"""
Cartesian products, corona products and joins

Flattened vertex ids:

* cartesian(G, H): (g, h) has id g * n(H) + h
* corona(G, H): centers keep the ids 0..n(G)-1, satellite h of copy H^i has id n(G) + i * n(H) + h
* join(G, H): G keeps its ids, vertex h of H has id n(G) + h
"""
from enum import IntEnum
from typing import List

from ..errors import GraphError
from .graph import Graph, LabelKind, ProductInfo, ProductKind, VertexLabel


class LayerSide(IntEnum):
    """Which factor a layer copies

    G: the G-layer G^h = V(G) x {h}, anchored at h
    H: the H-layer ^gH = {g} x V(H), anchored at g
    """

    G = 0
    H = 1


def _check_nonempty(*graphs: Graph):
    for g in graphs:
        if g.order < 1:
            raise GraphError("Product factors need at least one vertex")


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product G□H

    Args:
        g (Graph): first factor
        h (Graph): second factor

    Returns:
        Graph: the product with pair labels "(g,h)"; the symmetry hints are the
        factor hints acting on one coordinate
    """
    _check_nonempty(g, h)
    ng, nh = g.order, h.order
    edges = []
    for a in range(ng):
        for b in range(nh):
            v = a * nh + b
            for c in g.adjacency[a]:
                if c > a:
                    edges.append((v, c * nh + b))
            for c in h.adjacency[b]:
                if c > b:
                    edges.append((v, a * nh + c))

    labels = [
        VertexLabel(
            kind=LabelKind.CARTESIAN_PAIR,
            indices=(a, b),
            text=f"({g.label(a)},{h.label(b)})",
        )
        for a in range(ng)
        for b in range(nh)
    ]
    hints = []
    for p in g.symmetry_hints:
        hints.append([p[a] * nh + b for a in range(ng) for b in range(nh)])
    for q in h.symmetry_hints:
        hints.append([a * nh + q[b] for a in range(ng) for b in range(nh)])

    return Graph.from_edges(
        ng * nh,
        edges,
        labels=labels,
        symmetry_hints=hints,
        name=f"cartesian({g.name},{h.name})",
        product=ProductInfo(kind=ProductKind.CARTESIAN, left_order=ng, right_order=nh),
    )


def corona_product(g: Graph, h: Graph) -> Graph:
    """Corona product G⊙H, one copy H^i of H per vertex v_i of G joined to v_i"""
    if g.order < 1:
        raise GraphError("The corona product needs a nonempty first factor")
    ng, nh = g.order, h.order

    def satellite(i: int, b: int) -> int:
        return ng + i * nh + b

    edges = list(g.edges())
    for i in range(ng):
        for b in range(nh):
            edges.append((i, satellite(i, b)))
            for c in h.adjacency[b]:
                if c > b:
                    edges.append((satellite(i, b), satellite(i, c)))

    labels = [
        VertexLabel(kind=LabelKind.CORONA_CENTER, indices=(i,), text=g.label(i))
        for i in range(ng)
    ]
    for i in range(ng):
        for b in range(nh):
            text = f"{g.label(i)}'" if nh == 1 else f"({g.label(i)},{h.label(b)})'"
            labels.append(
                VertexLabel(kind=LabelKind.CORONA_SATELLITE, indices=(i, b), text=text)
            )

    hints = []
    for p in g.symmetry_hints:
        hints.append(
            list(p) + [satellite(p[i], b) for i in range(ng) for b in range(nh)]
        )
    # a hint of H may act on a single copy
    for q in h.symmetry_hints:
        for i in range(ng):
            perm = list(range(ng + ng * nh))
            for b in range(nh):
                perm[satellite(i, b)] = satellite(i, q[b])
            hints.append(perm)

    return Graph.from_edges(
        ng * (1 + nh),
        edges,
        labels=labels,
        symmetry_hints=hints,
        name=f"corona({g.name},{h.name})",
        product=ProductInfo(kind=ProductKind.CORONA, left_order=ng, right_order=nh),
    )


def join(g: Graph, h: Graph) -> Graph:
    """Join G∨H, the disjoint union plus all edges between G and H"""
    _check_nonempty(g, h)
    ng, nh = g.order, h.order
    edges = list(g.edges())
    edges += [(ng + a, ng + b) for a, b in h.edges()]
    edges += [(a, ng + b) for a in range(ng) for b in range(nh)]

    left = [g.label(a) for a in range(ng)]
    taken = set(left)
    labels = [
        VertexLabel(kind=LabelKind.JOIN_LEFT, indices=(a,), text=t)
        for a, t in enumerate(left)
    ]
    for b in range(nh):
        text = h.label(b)
        while text in taken:
            text += "*"
        taken.add(text)
        labels.append(VertexLabel(kind=LabelKind.JOIN_RIGHT, indices=(b,), text=text))

    hints = [list(p) + list(range(ng, ng + nh)) for p in g.symmetry_hints]
    hints += [list(range(ng)) + [ng + q[b] for b in range(nh)] for q in h.symmetry_hints]

    return Graph.from_edges(
        ng + nh,
        edges,
        labels=labels,
        symmetry_hints=hints,
        name=f"join({g.name},{h.name})",
        product=ProductInfo(kind=ProductKind.JOIN, left_order=ng, right_order=nh),
    )


def layer_vertices(p: Graph, side: LayerSide, anchor: int) -> List[int]:
    """Vertex ids of a layer of a Cartesian product

    Args:
        p (Graph): a graph built by cartesian_product
        side (LayerSide): G for the layer G^anchor, H for the layer ^anchor H
        anchor (int): the fixed factor vertex id

    Raises:
        GraphError: if p is not a Cartesian product or the anchor is invalid

    Returns:
        List[int]: the layer in ascending id order
    """
    if p.product is None or p.product.kind != ProductKind.CARTESIAN:
        raise GraphError(f"{p.name} is not a Cartesian product")
    ng, nh = p.product.left_order, p.product.right_order
    if side == LayerSide.G:
        if not 0 <= anchor < nh:
            raise GraphError(f"Invalid anchor {anchor} for a G-layer")
        return [a * nh + anchor for a in range(ng)]
    if not 0 <= anchor < ng:
        raise GraphError(f"Invalid anchor {anchor} for an H-layer")
    return [anchor * nh + b for b in range(nh)]
