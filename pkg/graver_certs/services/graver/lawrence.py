from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from graver_certs.services.linalg.matrix import IntMatrix, IntVector


@dataclass(frozen=True, slots=True)
class BlockVector:
    """A vector of length block_size * block_count read as consecutive blocks."""

    vector: IntVector
    block_size: int
    block_count: int

    def __post_init__(self) -> None:
        if len(self.vector) != self.block_size * self.block_count:
            raise ValueError(
                f"length {len(self.vector)} is not {self.block_size} x {self.block_count}"
            )

    @classmethod
    def from_blocks(cls, blocks: Sequence[Sequence[int]]) -> BlockVector:
        if not blocks:
            raise ValueError("at least one block is required")
        size = len(blocks[0])
        if any(len(block) != size for block in blocks):
            raise ValueError("blocks have unequal lengths")
        return cls(tuple(value for block in blocks for value in block), size, len(blocks))

    def block(self, index: int) -> IntVector:
        start = index * self.block_size
        return self.vector[start : start + self.block_size]

    def blocks(self) -> list[IntVector]:
        return [self.block(i) for i in range(self.block_count)]


def lawrence_lift(matrix: IntMatrix, copies: int) -> IntMatrix:
    """
    The h-th Lawrence lifting: h diagonal copies of an s x t matrix on top of a
    band of h horizontally repeated t x t identities, shape (h*s + t) x (h*t).
    """
    if copies < 1:
        raise ValueError(f"number of copies must be positive, got {copies}")
    s, t = matrix.shape
    rows: list[list[int]] = []
    for block in range(copies):
        for row in matrix.rows():
            full = [0] * (copies * t)
            full[block * t : (block + 1) * t] = row
            rows.append(full)
    for i in range(t):
        rows.append([1 if j % t == i else 0 for j in range(copies * t)])
    return IntMatrix.from_rows(rows)


def type_of(vector: BlockVector) -> int:
    """Number of nonzero blocks."""
    return sum(1 for block in vector.blocks() if any(block))
