from __future__ import annotations

import logging

from graver_certs.services.bipartite.circuits import CircuitWalk, relabeling_onto, walk_to_matrix
from graver_certs.services.bipartite.shape import BipartiteShape
from graver_certs.services.construction.family import CircuitFamily, ConstructionError

LOGGER = logging.getLogger(__name__)

SHAPE_3X4 = BipartiteShape(3, 4)
SHAPE_4X4 = BipartiteShape(4, 4)

# Seven circuits of A_{3,4} with the relation
# x1 + 2x2 + 3x3 + 3x4 + 5x5 + 6x6 + 7x7 = 0.
SEVEN_CIRCUIT_WALKS: tuple[tuple[tuple[int, int], ...], ...] = (
    ((1, 4), (3, 2), (2, 3)),
    ((1, 2), (3, 3), (2, 1)),
    ((1, 4), (2, 1), (3, 2)),
    ((1, 4), (2, 2), (3, 1)),
    ((1, 1), (2, 2), (3, 3)),
    ((1, 3), (2, 4), (3, 2)),
    ((1, 2), (2, 3), (3, 4)),
)
SEVEN_CIRCUIT_COEFFICIENTS: tuple[int, ...] = (1, 2, 3, 3, 5, 6, 7)

SEED_COEFFICIENTS: tuple[int, ...] = (7, 2, 3, 3, 5, 6, 1)
SEED_LAST_WALK: tuple[tuple[int, int], ...] = ((1, 2), (2, 3), (3, 4))

# Circuits 7..10 of the sharper A_{4,4} relation; 1..6 are the first six above.
FOUR_BY_FOUR_EXTRA_WALKS: tuple[tuple[tuple[int, int], ...], ...] = (
    ((1, 2), (4, 1), (3, 4)),
    ((2, 3), (4, 2)),
    ((3, 4), (4, 3)),
    ((1, 2), (2, 3), (3, 1), (4, 4)),
)
FOUR_BY_FOUR_COEFFICIENTS: tuple[int, ...] = (2, 4, 6, 6, 10, 12, 7, 7, 7, 7)


def seven_circuits() -> CircuitFamily:
    """The seven A_{3,4} circuits in their original order and coefficients."""
    circuits = [walk_to_matrix(CircuitWalk(SHAPE_3X4, pairs)) for pairs in SEVEN_CIRCUIT_WALKS]
    return CircuitFamily.build(SHAPE_3X4, circuits, SEVEN_CIRCUIT_COEFFICIENTS)


def seed_3x4() -> CircuitFamily:
    """
    Recursion seed: swap the first and last of the seven circuits, then
    relabel vertices so the last circuit is (v1,u2,v2,u3,v3,u4).
    """
    original = seven_circuits()
    circuits = list(original.circuits)
    circuits[0], circuits[-1] = circuits[-1], circuits[0]
    swapped = CircuitFamily.build(SHAPE_3X4, circuits, SEED_COEFFICIENTS)

    target = CircuitWalk(SHAPE_3X4, SEED_LAST_WALK)
    sigma_v, sigma_u = relabeling_onto(swapped.last_walk(), target)
    seed = swapped.relabeled(sigma_v, sigma_u)
    if seed.last_walk() != target:
        raise ConstructionError(f"seed relabeling produced {seed.last_walk()}, expected {target}")
    LOGGER.debug("seed relabeling V=%s U=%s", sigma_v, sigma_u)
    return seed


def example_4_4() -> CircuitFamily:
    """Ten circuits of A_{4,4} with coefficient sum 68."""
    first_six = [circuit.embed(SHAPE_4X4) for circuit in seven_circuits().circuits[:6]]
    extra = [walk_to_matrix(CircuitWalk(SHAPE_4X4, pairs)) for pairs in FOUR_BY_FOUR_EXTRA_WALKS]
    return CircuitFamily.build(SHAPE_4X4, first_six + extra, FOUR_BY_FOUR_COEFFICIENTS)
