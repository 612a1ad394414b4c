import itertools

import pytest

from graver_certs.services.bipartite import (
    BipartiteShape,
    CircuitError,
    CircuitMatrix,
    CircuitWalk,
    apply_vertex_permutation,
    incidence_matrix,
    is_circuit,
    matrix_to_walk,
    relabeling_onto,
    walk_to_matrix,
)
from graver_certs.services.construction.seeds import SEVEN_CIRCUIT_WALKS

SHAPE_2X2 = BipartiteShape(2, 2)
SHAPE_3X4 = BipartiteShape(3, 4)


def test_shape_requires_two_vertices_per_side() -> None:
    with pytest.raises(ValueError):
        BipartiteShape(1, 3)


def test_incidence_matrix_of_square() -> None:
    matrix = incidence_matrix(SHAPE_2X2)
    assert [list(row) for row in matrix.rows()] == [
        [1, 1, 0, 0],
        [0, 0, 1, 1],
        [1, 0, 1, 0],
        [0, 1, 0, 1],
    ]


def test_incidence_columns_hit_both_endpoints() -> None:
    shape = BipartiteShape(3, 4)
    matrix = incidence_matrix(shape)
    assert matrix.shape == (7, 12)
    for i in range(1, 4):
        for j in range(1, 5):
            column = matrix.column(shape.edge_index(i, j))
            assert sum(column) == 2
            assert column[j - 1] == 1
            assert column[shape.r + i - 1] == 1


def test_walk_to_matrix_examples() -> None:
    assert walk_to_matrix(CircuitWalk.of(SHAPE_2X2, (1, 1), (2, 2))).rows() == [[1, -1], [-1, 1]]
    assert walk_to_matrix(CircuitWalk.of(SHAPE_3X4, (1, 1), (2, 2), (3, 3))).rows() == [
        [1, 0, -1, 0],
        [-1, 1, 0, 0],
        [0, -1, 1, 0],
    ]
    assert walk_to_matrix(CircuitWalk.of(SHAPE_3X4, (1, 4), (3, 2), (2, 3))).rows() == [
        [0, 0, -1, 1],
        [0, -1, 1, 0],
        [0, 1, 0, -1],
    ]


def test_walk_rejects_repeated_vertex() -> None:
    with pytest.raises(CircuitError):
        CircuitWalk.of(SHAPE_3X4, (1, 1), (1, 2))
    with pytest.raises(CircuitError):
        CircuitWalk.of(SHAPE_3X4, (1, 1), (2, 1))


def test_walk_rejects_out_of_range_vertex() -> None:
    with pytest.raises(CircuitError):
        CircuitWalk.of(SHAPE_2X2, (1, 1), (3, 2))


def test_matrix_to_walk_inverts_square() -> None:
    circuit = CircuitMatrix.from_rows(SHAPE_2X2, [[1, -1], [-1, 1]])
    assert matrix_to_walk(circuit) == CircuitWalk.of(SHAPE_2X2, (1, 1), (2, 2))


def test_matrix_to_walk_reads_every_seed_walk() -> None:
    for pairs in SEVEN_CIRCUIT_WALKS:
        walk = CircuitWalk(SHAPE_3X4, pairs)
        assert matrix_to_walk(walk_to_matrix(walk)) == walk


def test_matrix_to_walk_rejects_two_disjoint_squares() -> None:
    shape = BipartiteShape(4, 4)
    first = walk_to_matrix(CircuitWalk.of(shape, (1, 1), (2, 2))).rows()
    second = walk_to_matrix(CircuitWalk.of(shape, (3, 3), (4, 4))).rows()
    combined = [[a + b for a, b in zip(x, y)] for x, y in zip(first, second)]
    with pytest.raises(CircuitError):
        matrix_to_walk(CircuitMatrix.from_rows(shape, combined))


def test_round_trip_normalizes_rotations() -> None:
    for t, r in [(3, 3), (3, 4), (4, 5)]:
        shape = BipartiteShape(t, r)
        for length in range(2, min(t, r) + 1):
            for lefts in itertools.permutations(range(1, t + 1), length):
                for rights in itertools.permutations(range(1, r + 1), length):
                    walk = CircuitWalk(shape, tuple(zip(lefts, rights)))
                    assert matrix_to_walk(walk_to_matrix(walk)) == walk.normalized()


def test_is_circuit_examples() -> None:
    for pairs in SEVEN_CIRCUIT_WALKS:
        assert is_circuit(walk_to_matrix(CircuitWalk(SHAPE_3X4, pairs)).to_vector(), SHAPE_3X4)
    doubled = tuple(2 * value for value in walk_to_matrix(CircuitWalk(SHAPE_3X4, SEVEN_CIRCUIT_WALKS[0])).to_vector())
    assert not is_circuit(doubled, SHAPE_3X4)
    assert not is_circuit((0,) * 12, SHAPE_3X4)
    assert not is_circuit((0,) * 11, SHAPE_3X4)


def test_circuit_vector_lies_in_incidence_kernel() -> None:
    matrix = incidence_matrix(SHAPE_3X4)
    for pairs in SEVEN_CIRCUIT_WALKS:
        vector = walk_to_matrix(CircuitWalk(SHAPE_3X4, pairs)).to_vector()
        assert matrix.annihilates(vector)


def test_identity_permutation_keeps_circuit() -> None:
    circuit = walk_to_matrix(CircuitWalk(SHAPE_3X4, SEVEN_CIRCUIT_WALKS[4]))
    assert apply_vertex_permutation(circuit, (1, 2, 3), (1, 2, 3, 4)) == circuit


def test_seed_relabeling() -> None:
    source = CircuitWalk.of(SHAPE_3X4, (1, 4), (3, 2), (2, 3))
    target = CircuitWalk.of(SHAPE_3X4, (1, 2), (2, 3), (3, 4))
    sigma_v, sigma_u = relabeling_onto(source, target)
    assert sigma_v == (1, 3, 2)
    assert sigma_u == (1, 3, 4, 2)
    image = apply_vertex_permutation(walk_to_matrix(source), sigma_v, sigma_u)
    assert image == walk_to_matrix(target)
    assert is_circuit(image.to_vector(), SHAPE_3X4)


def test_relabeling_rejects_different_lengths() -> None:
    with pytest.raises(CircuitError):
        relabeling_onto(
            CircuitWalk.of(SHAPE_3X4, (1, 1), (2, 2)),
            CircuitWalk.of(SHAPE_3X4, (1, 1), (2, 2), (3, 3)),
        )


def test_permutation_must_be_valid() -> None:
    circuit = walk_to_matrix(CircuitWalk.of(SHAPE_2X2, (1, 1), (2, 2)))
    with pytest.raises(ValueError):
        apply_vertex_permutation(circuit, (1, 1), (1, 2))


def test_embed_pads_with_zeros() -> None:
    circuit = walk_to_matrix(CircuitWalk.of(SHAPE_2X2, (1, 1), (2, 2)))
    embedded = circuit.embed(BipartiteShape(3, 4))
    assert embedded.rows() == [[1, -1, 0, 0], [-1, 1, 0, 0], [0, 0, 0, 0]]
    assert embedded.cycle_length == 2
    with pytest.raises(CircuitError):
        embedded.embed(SHAPE_2X2)
