from __future__ import annotations

from dataclasses import dataclass

from graver_certs.services.graver.lawrence import lawrence_lift
from graver_certs.services.linalg.matrix import IntMatrix


@dataclass(frozen=True, slots=True, order=True)
class BipartiteShape:
    """K_{t,r} with left vertices v_1..v_t and right vertices u_1..u_r."""

    t: int
    r: int

    def __post_init__(self) -> None:
        if self.t < 2 or self.r < 2:
            raise ValueError(f"K_{{t,r}} needs t >= 2 and r >= 2, got ({self.t}, {self.r})")

    @property
    def edge_count(self) -> int:
        return self.t * self.r

    def edge_index(self, i: int, j: int) -> int:
        """0-based column of edge (v_i, u_j); U-vertices index the Lawrence blocks."""
        return (j - 1) * self.t + (i - 1)

    def __str__(self) -> str:
        return f"{self.t}x{self.r}"


def incidence_matrix(shape: BipartiteShape) -> IntMatrix:
    """A_{t,r}: the r-th Lawrence lifting of the 1 x t all-ones matrix."""
    return lawrence_lift(IntMatrix.from_rows([[1] * shape.t]), shape.r)
