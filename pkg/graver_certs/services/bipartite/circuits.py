from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import networkx as nx

from graver_certs.services.bipartite.shape import BipartiteShape
from graver_certs.services.linalg.matrix import IntVector

Permutation = tuple[int, ...]


class CircuitError(ValueError):
    """Raised when a walk or a matrix violates the circuit invariants of K_{t,r}."""


@dataclass(frozen=True, slots=True)
class CircuitWalk:
    """
    A simple cycle (v_{i_1}, u_{j_1}, ..., v_{i_l}, u_{j_l}) stored as 1-based
    (i, j) pairs. The signed circuit is +1 on every (v_{i_a}, u_{j_a}) and -1
    on every (v_{i_{a+1}}, u_{j_a}), cyclically.
    """

    shape: BipartiteShape
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if len(self.pairs) < 2:
            raise CircuitError(f"a circuit needs at least 2 pairs, got {len(self.pairs)}")
        lefts = [i for i, _ in self.pairs]
        rights = [j for _, j in self.pairs]
        if len(set(lefts)) != len(lefts) or len(set(rights)) != len(rights):
            raise CircuitError(f"walk {self} repeats a vertex")
        if not all(1 <= i <= self.shape.t for i in lefts):
            raise CircuitError(f"walk {self} leaves V = v_1..v_{self.shape.t}")
        if not all(1 <= j <= self.shape.r for j in rights):
            raise CircuitError(f"walk {self} leaves U = u_1..u_{self.shape.r}")

    @classmethod
    def of(cls, shape: BipartiteShape, *pairs: tuple[int, int]) -> CircuitWalk:
        return cls(shape, tuple((int(i), int(j)) for i, j in pairs))

    @property
    def length(self) -> int:
        return len(self.pairs)

    def normalized(self) -> CircuitWalk:
        """Rotate so the walk starts at its smallest V-index (orientation kept)."""
        start = min(range(len(self.pairs)), key=lambda a: self.pairs[a][0])
        return CircuitWalk(self.shape, self.pairs[start:] + self.pairs[:start])

    def sort_key(self) -> tuple[int, tuple[tuple[int, int], ...]]:
        return len(self.pairs), self.pairs

    def __str__(self) -> str:
        return "(" + ",".join(f"v{i},u{j}" for i, j in self.pairs) + ")"


@dataclass(frozen=True, slots=True)
class CircuitMatrix:
    """A t x r integer matrix indexed by (V, U); see ``circuit_violation`` for validity."""

    shape: BipartiteShape
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.shape.t or any(len(row) != self.shape.r for row in self.entries):
            raise CircuitError(f"entries are not a {self.shape.t}x{self.shape.r} matrix")

    @classmethod
    def from_rows(cls, shape: BipartiteShape, rows: Sequence[Sequence[int]]) -> CircuitMatrix:
        return cls(shape, tuple(tuple(int(value) for value in row) for row in rows))

    @classmethod
    def from_vector(cls, shape: BipartiteShape, vector: Sequence[int]) -> CircuitMatrix:
        if len(vector) != shape.edge_count:
            raise CircuitError(f"vector of length {len(vector)} does not fit {shape}")
        rows = [
            [vector[shape.edge_index(i, j)] for j in range(1, shape.r + 1)]
            for i in range(1, shape.t + 1)
        ]
        return cls.from_rows(shape, rows)

    def to_vector(self) -> IntVector:
        """Flatten in incidence-matrix column order ((j-1)*t + i)."""
        return tuple(
            self.entries[i][j] for j in range(self.shape.r) for i in range(self.shape.t)
        )

    def rows(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    def embed(self, shape: BipartiteShape) -> CircuitMatrix:
        """Zero-pad into a larger K_{t',r'} (natural embedding)."""
        if shape.t < self.shape.t or shape.r < self.shape.r:
            raise CircuitError(f"cannot embed {self.shape} into {shape}")
        rows = [[0] * shape.r for _ in range(shape.t)]
        for i, row in enumerate(self.entries):
            rows[i][: len(row)] = row
        return CircuitMatrix.from_rows(shape, rows)

    @property
    def cycle_length(self) -> int:
        return sum(1 for row in self.entries for value in row if value) // 2


def circuit_violation(shape: BipartiteShape, rows: Sequence[Sequence[int]]) -> str | None:
    """Return why ``rows`` is not a circuit matrix of K_{t,r}, or None if it is."""
    if len(rows) != shape.t or any(len(row) != shape.r for row in rows):
        return f"not a {shape.t}x{shape.r} matrix"
    for i, row in enumerate(rows, start=1):
        for j, value in enumerate(row, start=1):
            if value not in (-1, 0, 1):
                return f"entry {value} at (v{i},u{j}) is outside {{-1,0,1}}"
    support = [(i, j) for i, row in enumerate(rows) for j, value in enumerate(row) if value]
    if not support:
        return "zero matrix"
    for i, row in enumerate(rows, start=1):
        if sum(row):
            return f"row v{i} sums to {sum(row)}"
    for j in range(shape.r):
        total = sum(row[j] for row in rows)
        if total:
            return f"column u{j + 1} sums to {total}"

    graph = nx.Graph()
    graph.add_edges_from((("v", i), ("u", j)) for i, j in support)
    if any(degree != 2 for _, degree in graph.degree()) or not nx.is_connected(graph):
        return "support is not a single cycle"
    return None


def is_circuit(vector: Sequence[int], shape: BipartiteShape) -> bool:
    """True iff ``vector`` (incidence column order) is a circuit of A_{t,r}."""
    if len(vector) != shape.edge_count:
        return False
    return circuit_violation(shape, CircuitMatrix.from_vector(shape, vector).entries) is None


def walk_to_matrix(walk: CircuitWalk) -> CircuitMatrix:
    shape = walk.shape
    rows = [[0] * shape.r for _ in range(shape.t)]
    count = len(walk.pairs)
    for a, (i, j) in enumerate(walk.pairs):
        following = walk.pairs[(a + 1) % count][0]
        rows[i - 1][j - 1] = 1
        rows[following - 1][j - 1] = -1
    return CircuitMatrix.from_rows(shape, rows)


def matrix_to_walk(circuit: CircuitMatrix) -> CircuitWalk:
    """Walk starting at the lowest V-vertex of the support with its +1 edge first."""
    reason = circuit_violation(circuit.shape, circuit.entries)
    if reason is not None:
        raise CircuitError(reason)

    rows = circuit.entries
    start = next(i for i, row in enumerate(rows) if any(row))
    pairs: list[tuple[int, int]] = []
    current = start
    while True:
        plus = rows[current].index(1)
        pairs.append((current + 1, plus + 1))
        current = next(i for i, row in enumerate(rows) if row[plus] == -1)
        if current == start:
            break
    return CircuitWalk(circuit.shape, tuple(pairs))


def _check_permutation(images: Sequence[int], size: int, side: str) -> Permutation:
    images = tuple(images)
    if sorted(images) != list(range(1, size + 1)):
        raise ValueError(f"{side} permutation {images} is not a permutation of 1..{size}")
    return images


def apply_vertex_permutation(
    circuit: CircuitMatrix,
    sigma_v: Sequence[int],
    sigma_u: Sequence[int],
) -> CircuitMatrix:
    """Relabel vertices: entry (sigma_v(i), sigma_u(j)) of the result is entry (i, j)."""
    shape = circuit.shape
    sigma_v = _check_permutation(sigma_v, shape.t, "V")
    sigma_u = _check_permutation(sigma_u, shape.r, "U")
    rows = [[0] * shape.r for _ in range(shape.t)]
    for i, row in enumerate(circuit.entries):
        for j, value in enumerate(row):
            rows[sigma_v[i] - 1][sigma_u[j] - 1] = value
    return CircuitMatrix.from_rows(shape, rows)


def relabeling_onto(source: CircuitWalk, target: CircuitWalk) -> tuple[Permutation, Permutation]:
    """
    Vertex permutation carrying ``source`` position by position onto ``target``.
    Vertices used by neither walk's position map are paired in increasing order.
    """
    if source.shape != target.shape or source.length != target.length:
        raise CircuitError(f"cannot relabel {source} onto {target}")
    shape = source.shape

    def _extend(mapping: dict[int, int], size: int) -> Permutation:
        free_sources = [k for k in range(1, size + 1) if k not in mapping]
        free_targets = sorted(set(range(1, size + 1)) - set(mapping.values()))
        mapping.update(zip(free_sources, free_targets))
        return tuple(mapping[k] for k in range(1, size + 1))

    sigma_v = _extend({s: d for (s, _), (d, _) in zip(source.pairs, target.pairs)}, shape.t)
    sigma_u = _extend({s: d for (_, s), (_, d) in zip(source.pairs, target.pairs)}, shape.r)
    return sigma_v, sigma_u
