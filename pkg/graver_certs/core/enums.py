from enum import Enum


class StrEnum(str, Enum):
    def __str__(self) -> str:
        return str(self.value)


class CheckName(StrEnum):
    DIMENSIONS = "dimension-mismatch"
    NOT_A_CIRCUIT = "not-a-circuit"
    RELATION_SUM = "relation-sum nonzero"
    NOT_PRIMITIVE = "not-primitive"
    BOUND_MISMATCH = "claimed-bound mismatch"


class RecursionStep(StrEnum):
    LIFT_T = "lift_t"
    EXTEND_R = "extend_r"


class ExampleName(StrEnum):
    SEED_3X4 = "seed3x4"
    EXAMPLE_4X4 = "example4x4"


class ExitCode(int, Enum):
    OK = 0
    INVALID = 1
    USAGE = 2
    RESOURCE_LIMIT = 3
