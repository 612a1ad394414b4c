from graver_certs.services.construction.bounds import BoundValue, b_value, theorem_bound
from graver_certs.services.construction.family import CircuitFamily, ConstructionError
from graver_certs.services.construction.recursion import (
    build_certificate,
    certificate_schedule,
    extend_r,
    lift_t,
)
from graver_certs.services.construction.seeds import example_4_4, seed_3x4, seven_circuits

__all__ = [
    "BoundValue",
    "CircuitFamily",
    "ConstructionError",
    "b_value",
    "build_certificate",
    "certificate_schedule",
    "example_4_4",
    "extend_r",
    "lift_t",
    "seed_3x4",
    "seven_circuits",
    "theorem_bound",
]
