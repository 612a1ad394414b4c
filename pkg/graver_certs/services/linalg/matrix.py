from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

IntVector = tuple[int, ...]


class MatrixParseError(ValueError):
    """Raised when matrix text cannot be parsed; ``line`` is 1-based."""

    def __init__(self, message: str, *, line: int | None = None) -> None:
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"{prefix}{message}")


@dataclass(frozen=True, slots=True)
class IntMatrix:
    """Dense integer matrix stored row-major; entries are Python ints."""

    n_rows: int
    n_cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n_rows < 1 or self.n_cols < 1:
            raise ValueError(f"matrix must be at least 1x1, got {self.n_rows}x{self.n_cols}")
        if len(self.entries) != self.n_rows * self.n_cols:
            raise ValueError(
                f"expected {self.n_rows * self.n_cols} entries for a "
                f"{self.n_rows}x{self.n_cols} matrix, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> IntMatrix:
        if not rows:
            raise ValueError("matrix needs at least one row")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise ValueError("rows have unequal lengths")
        return cls(len(rows), width, tuple(int(value) for row in rows for value in row))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]]) -> IntMatrix:
        if not columns:
            raise ValueError("matrix needs at least one column")
        height = len(columns[0])
        if any(len(column) != height for column in columns):
            raise ValueError("columns have unequal lengths")
        return cls.from_rows([[column[i] for column in columns] for i in range(height)])

    @classmethod
    def identity(cls, size: int) -> IntMatrix:
        return cls.from_rows([[1 if i == j else 0 for j in range(size)] for i in range(size)])

    @property
    def shape(self) -> tuple[int, int]:
        return self.n_rows, self.n_cols

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        return self.entries[i * self.n_cols + j]

    def row(self, i: int) -> IntVector:
        start = i * self.n_cols
        return self.entries[start : start + self.n_cols]

    def rows(self) -> list[IntVector]:
        return [self.row(i) for i in range(self.n_rows)]

    def column(self, j: int) -> IntVector:
        return self.entries[j :: self.n_cols]

    def columns(self) -> list[IntVector]:
        return [self.column(j) for j in range(self.n_cols)]

    def transpose(self) -> IntMatrix:
        return IntMatrix.from_rows(self.columns())

    def multiply(self, vector: Sequence[int]) -> IntVector:
        if len(vector) != self.n_cols:
            raise ValueError(f"vector length {len(vector)} does not match {self.n_cols} columns")
        return tuple(sum(a * b for a, b in zip(row, vector) if a and b) for row in self.rows())

    def annihilates(self, vector: Sequence[int]) -> bool:
        return not any(self.multiply(vector))

    def to_text(self) -> str:
        lines = [f"{self.n_rows} {self.n_cols}"]
        lines.extend(" ".join(str(value) for value in row) for row in self.rows())
        return "\n".join(lines) + "\n"


def parse_matrix_text(text: str) -> IntMatrix:
    """Parse ``"<rows> <cols>"`` followed by one line per row.

    Blank lines and lines starting with ``#`` are skipped; reported line
    numbers refer to the raw input.
    """
    content = [
        (number, line.split())
        for number, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not content:
        raise MatrixParseError("empty matrix text", line=1)

    header_line, header = content[0]
    if len(header) != 2:
        raise MatrixParseError("header must be '<n_rows> <n_cols>'", line=header_line)
    n_rows, n_cols = (_parse_int(token, header_line) for token in header)
    if n_rows < 1 or n_cols < 1:
        raise MatrixParseError("dimensions must be positive", line=header_line)

    body = content[1:]
    if len(body) != n_rows:
        last_line = body[-1][0] if body else header_line
        raise MatrixParseError(f"expected {n_rows} rows, found {len(body)}", line=last_line)

    rows: list[list[int]] = []
    for number, tokens in body:
        if len(tokens) != n_cols:
            raise MatrixParseError(f"expected {n_cols} entries, found {len(tokens)}", line=number)
        rows.append([_parse_int(token, number) for token in tokens])
    return IntMatrix.from_rows(rows)


def _parse_int(token: str, line: int) -> int:
    try:
        return int(token, 10)
    except ValueError as exc:
        raise MatrixParseError(f"not an integer: {token!r}", line=line) from exc


def negate(vector: Iterable[int]) -> IntVector:
    return tuple(-value for value in vector)


def add(u: Sequence[int], v: Sequence[int]) -> IntVector:
    return tuple(a + b for a, b in zip(u, v))


def subtract(u: Sequence[int], v: Sequence[int]) -> IntVector:
    return tuple(a - b for a, b in zip(u, v))


def scale(vector: Iterable[int], factor: int) -> IntVector:
    return tuple(factor * value for value in vector)
