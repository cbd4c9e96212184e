from .graph import Graph, LabelKind, ProductKind, ProductLabel, VertexLabel
from .families import FAMILIES, build_graph
from .distance import (
    INFINITE,
    DistanceOracle,
    GridPoint,
    Unreachable,
    all_pairs_distances,
    infinite_grid_distance,
)
from .structure import (
    clique_number,
    diameter,
    girth,
    is_convex_subset,
    leaf_count,
    max_clique,
    radius,
)
from .products import LayerSide, cartesian_product, corona_product, join, layer_vertices
