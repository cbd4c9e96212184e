from typing import Dict, List, Type

from pydantic import BaseModel, root_validator

from ..mobility.configuration import Schedule
from .algorithm_corona_join import (
    BirdcageJoinSchedule,
    CliqueMinusEdgeJoinSchedule,
    CoronaCycleSchedule,
)
from .algorithm_products import (
    C4CylinderSchedule,
    Cylinder5Schedule,
    GridSchedule,
    HammingSchedule,
    PrismCycleSchedule,
    ProductFamilySchedule,
    StarSquareSchedule,
)


class ScheduleFamily(BaseModel):
    name: str
    parameters: List[str]
    algorithm: Type[ProductFamilySchedule]
    description: str = ""


SCHEDULE_FAMILIES: Dict[str, ScheduleFamily] = {
    family.name: family
    for family in [
        ScheduleFamily(name="hamming", parameters=["n", "m"], algorithm=HammingSchedule, description="K_n□K_m, n >= m >= 3"),
        ScheduleFamily(name="star_square", parameters=["k"], algorithm=StarSquareSchedule, description="K_{1,k}□K_{1,k}, k >= 2"),
        ScheduleFamily(name="grid", parameters=["n", "m"], algorithm=GridSchedule, description="P_n□P_m, n, m >= 3"),
        ScheduleFamily(name="prism_cycle", parameters=["n"], algorithm=PrismCycleSchedule, description="C_n□K_2, n >= 5"),
        ScheduleFamily(name="c4_cylinder", parameters=[], algorithm=C4CylinderSchedule, description="C_4□P_3"),
        ScheduleFamily(name="cylinder5", parameters=["r"], algorithm=Cylinder5Schedule, description="C_r□P_5, r = 9 or r >= 11"),
        ScheduleFamily(name="corona_cycle", parameters=["n"], algorithm=CoronaCycleSchedule, description="C_n⊙K_1, n >= 3"),
        ScheduleFamily(name="birdcage_join", parameters=["n"], algorithm=BirdcageJoinSchedule, description="B_n∨K_1, n >= 2"),
        ScheduleFamily(name="clique_minus_edge_join", parameters=["r", "s"], algorithm=CliqueMinusEdgeJoinSchedule, description="K_r⁻∨K_s⁻, r, s >= 3"),
    ]
}


class FamilySpec(BaseModel):
    """A schedule family with its parameters, e.g. hamming(4, 3)

    Unknown families and a wrong number of parameters are rejected here,
    parameter ranges are checked by the family algorithm.
    """

    family: str
    params: List[int] = []

    @root_validator(skip_on_failure=True)
    def check_family(cls, values):
        family, params = values["family"], values["params"]
        if family not in SCHEDULE_FAMILIES:
            raise ValueError(
                f"Unknown schedule family '{family}', expected one of {', '.join(SCHEDULE_FAMILIES)}"
            )
        expected = SCHEDULE_FAMILIES[family].parameters
        if len(params) != len(expected):
            raise ValueError(
                f"Family '{family}' takes {len(expected)} parameter(s) ({', '.join(expected)}), got {len(params)}"
            )
        return values

    def algorithm(self) -> ProductFamilySchedule:
        family = SCHEDULE_FAMILIES[self.family]
        return family.algorithm(**dict(zip(family.parameters, self.params)))

    @property
    def expression(self) -> str:
        return self.algorithm().expression


def generate_schedule(spec: FamilySpec) -> Schedule:
    """Generate and verify the schedule of a family

    Raises:
        ScheduleInputCheckError: if the parameters are out of range

    Returns:
        Schedule: a valid and complete schedule
    """
    return spec.algorithm().execute()
