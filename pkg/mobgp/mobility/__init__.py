from .configuration import (
    Configuration,
    FailureReason,
    Move,
    Schedule,
    TraversalReport,
    is_legal_move,
    verify_schedule,
)
from .space import ConfigurationSpace
from .explorer import (
    ConfigurationComponent,
    configuration_component,
    extract_witness_schedule,
    is_mobile_gp_set,
    naive_mobile_oracle,
)
from .solver import KDiagnostics, MobOptions, MobReport, mob_number
from .infinite_grid import Direction, verify_infinite_grid_rounds
