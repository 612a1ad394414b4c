from __future__ import annotations

from typing import Annotated, List, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

PositiveInt = Annotated[int, Field(gt=0)]
WalkPair = Annotated[List[int], Field(min_length=2, max_length=2)]


class LowerBoundCertificate(BaseModel):
    """Circuits of A_{t,r} and coefficients claiming g(A_{t,r}) >= sum(coefficients)."""

    model_config = ConfigDict(extra="forbid", strict=True)

    t: int = Field(ge=2)
    r: int = Field(ge=2)
    circuits: List[List[List[int]]] = Field(min_length=1)
    coefficients: List[PositiveInt] = Field(min_length=1)
    claimed_bound: int
    walks: Optional[List[List[WalkPair]]] = None

    @model_validator(mode="after")
    def _validate_dimensions(self) -> "LowerBoundCertificate":
        if len(self.coefficients) != len(self.circuits):
            raise ValueError(
                f"{len(self.coefficients)} coefficients for {len(self.circuits)} circuits"
            )
        for index, circuit in enumerate(self.circuits):
            if len(circuit) != self.t or any(len(row) != self.r for row in circuit):
                raise ValueError(f"circuits[{index}] is not a {self.t}x{self.r} matrix")
        if self.walks is not None and len(self.walks) != len(self.circuits):
            raise ValueError(f"{len(self.walks)} walks for {len(self.circuits)} circuits")
        return self
