import pytest

from graver_certs.services.bipartite import BipartiteShape, enumerate_circuits, incidence_matrix
from graver_certs.services.graver import (
    GraverLimits,
    ResourceLimitError,
    graver_basis,
    matrix_circuits,
)
from graver_certs.services.linalg import IntMatrix, l1_norm


def test_circuits_of_ones_row() -> None:
    assert matrix_circuits(IntMatrix.from_rows([[1, 1, 1]])) == sorted(
        [(1, -1, 0), (-1, 1, 0), (1, 0, -1), (-1, 0, 1), (0, 1, -1), (0, -1, 1)]
    )


def test_circuits_of_twisted_cubic_row_are_in_graver_basis() -> None:
    matrix = IntMatrix.from_rows([[1, 2, 3]])
    circuits = set(matrix_circuits(matrix))
    assert circuits == {(2, -1, 0), (-2, 1, 0), (3, 0, -1), (-3, 0, 1), (0, 3, -2), (0, -3, 2)}
    assert circuits <= set(graver_basis(matrix).elements)


def test_zero_column_is_a_circuit() -> None:
    assert matrix_circuits(IntMatrix.from_rows([[0, 1]])) == [(-1, 0), (1, 0)]


@pytest.mark.parametrize("t,r", [(2, 2), (2, 3), (3, 3), (3, 4)])
def test_incidence_circuits_match_cycle_enumeration(t, r) -> None:
    shape = BipartiteShape(t, r)
    expected = sorted(circuit.to_vector() for circuit in enumerate_circuits(shape))
    assert matrix_circuits(incidence_matrix(shape)) == expected


def test_l1_norm() -> None:
    assert l1_norm((3, -4, 0)) == 7


def test_circuit_scan_respects_cap() -> None:
    with pytest.raises(ResourceLimitError):
        matrix_circuits(IntMatrix.from_rows([[1] * 8]), GraverLimits(max_enumerated_circuits=10))
