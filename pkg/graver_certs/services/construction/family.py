from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from graver_certs.services.bipartite.circuits import (
    CircuitMatrix,
    CircuitWalk,
    apply_vertex_permutation,
    matrix_to_walk,
)
from graver_certs.services.bipartite.shape import BipartiteShape


class ConstructionError(ValueError):
    """Raised when a recursion precondition fails or (t, r) is out of range."""


@dataclass(frozen=True, slots=True)
class CircuitFamily:
    """Circuits x^1..x^k of K_{t,r} together with positive coefficients h."""

    shape: BipartiteShape
    circuits: tuple[CircuitMatrix, ...]
    coefficients: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.circuits or len(self.circuits) != len(self.coefficients):
            raise ConstructionError(
                f"need k >= 1 circuits with one coefficient each, got "
                f"{len(self.circuits)} circuits and {len(self.coefficients)} coefficients"
            )
        if any(circuit.shape != self.shape for circuit in self.circuits):
            raise ConstructionError(f"every circuit must live on K_{self.shape}")

    @classmethod
    def build(
        cls,
        shape: BipartiteShape,
        circuits: Sequence[CircuitMatrix],
        coefficients: Sequence[int],
    ) -> CircuitFamily:
        return cls(shape, tuple(circuits), tuple(int(h) for h in coefficients))

    def __len__(self) -> int:
        return len(self.circuits)

    @property
    def total(self) -> int:
        return sum(self.coefficients)

    def walks(self) -> list[CircuitWalk]:
        return [matrix_to_walk(circuit) for circuit in self.circuits]

    def last_walk(self) -> CircuitWalk:
        return matrix_to_walk(self.circuits[-1])

    def residual(self) -> list[list[int]]:
        """Entrywise sum of h_i * x^i; all zeros for a relation."""
        rows = [[0] * self.shape.r for _ in range(self.shape.t)]
        for h, circuit in zip(self.coefficients, self.circuits):
            for i, row in enumerate(circuit.entries):
                for j, value in enumerate(row):
                    rows[i][j] += h * value
        return rows

    def is_relation(self) -> bool:
        return not any(any(row) for row in self.residual())

    def relabeled(self, sigma_v: Sequence[int], sigma_u: Sequence[int]) -> CircuitFamily:
        return CircuitFamily(
            self.shape,
            tuple(apply_vertex_permutation(c, sigma_v, sigma_u) for c in self.circuits),
            self.coefficients,
        )
