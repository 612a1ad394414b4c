from graver_certs.services.bipartite import CircuitWalk, is_circuit
from graver_certs.services.construction import example_4_4, seed_3x4, seven_circuits
from graver_certs.services.construction.seeds import SHAPE_3X4, SHAPE_4X4


def _assert_relation_of_circuits(family) -> None:
    assert family.is_relation()
    assert all(is_circuit(circuit.to_vector(), family.shape) for circuit in family.circuits)


def test_seven_circuits_relation() -> None:
    family = seven_circuits()
    assert family.coefficients == (1, 2, 3, 3, 5, 6, 7)
    assert family.total == 27
    _assert_relation_of_circuits(family)


def test_seed_coefficients_and_last_walk() -> None:
    seed = seed_3x4()
    assert seed.shape == SHAPE_3X4
    assert seed.coefficients == (7, 2, 3, 3, 5, 6, 1)
    assert seed.total == 27
    assert seed.last_walk() == CircuitWalk.of(SHAPE_3X4, (1, 2), (2, 3), (3, 4))
    _assert_relation_of_circuits(seed)


def test_seed_is_a_relabeling_of_the_seven_circuits() -> None:
    original = {circuit.to_vector() for circuit in seven_circuits().circuits}
    seed = seed_3x4().relabeled((1, 3, 2), (1, 4, 2, 3))
    assert {circuit.to_vector() for circuit in seed.circuits} == original


def test_example_4_4() -> None:
    family = example_4_4()
    assert family.shape == SHAPE_4X4
    assert family.total == 68
    assert len(family) == 10
    assert family.walks()[7] == CircuitWalk.of(SHAPE_4X4, (2, 3), (4, 2))
    _assert_relation_of_circuits(family)
