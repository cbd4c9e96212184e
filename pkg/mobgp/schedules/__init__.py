from .algorithm import ScheduleAlgorithm, ScheduleExecutionError, ScheduleInputCheckError
from .recorder import MoveRecorder
from .families import SCHEDULE_FAMILIES, FamilySpec, generate_schedule
from .algorithm_factor import (
    FactorMobSchedule,
    GpoFactorSchedule,
    factor_mob_schedule,
    gpo_factor_schedule,
)
from .algorithm_lift import LiftSchedule, lift_schedule
from .algorithm_join import (
    CoronaCenterSchedule,
    CoronaSatelliteSchedule,
    JoinLowerBoundSchedule,
    corona_center_schedule,
    corona_satellite_schedule,
    join_lower_bound_schedule,
)
