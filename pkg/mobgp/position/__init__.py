from .geodesics import (
    GeodesicIndex,
    is_general_position,
    is_maximal_gp,
    is_mmd_pair,
    is_outer_general_position,
    is_x_positionable,
    lies_on_geodesic,
)
from .solvers import PositionReport, enumerate_gp_sets, gp_number, gpo_number
