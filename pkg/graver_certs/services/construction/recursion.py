from __future__ import annotations

import logging

from graver_certs.core.enums import RecursionStep
from graver_certs.services.bipartite.circuits import (
    CircuitWalk,
    apply_vertex_permutation,
    relabeling_onto,
    walk_to_matrix,
)
from graver_certs.services.bipartite.shape import BipartiteShape
from graver_certs.services.construction.family import CircuitFamily, ConstructionError
from graver_certs.services.construction.seeds import seed_3x4

LOGGER = logging.getLogger(__name__)


def _staircase(shape: BipartiteShape, offset: int, length: int) -> CircuitWalk:
    """(v1, u_{1+offset}, v2, u_{2+offset}, ..., v_length, u_{length+offset})."""
    return CircuitWalk(shape, tuple((a, a + offset) for a in range(1, length + 1)))


def _require_last(family: CircuitFamily, expected: CircuitWalk) -> None:
    if family.coefficients[-1] != 1:
        raise ConstructionError(
            f"last coefficient must be 1, got {family.coefficients[-1]}"
        )
    actual = family.last_walk()
    if actual != expected:
        raise ConstructionError(f"last circuit must be {expected}, got {actual}")


def _finish(
    shape: BipartiteShape,
    circuits: list,
    coefficients: tuple[int, ...],
    constructed_last: CircuitWalk,
    target: CircuitWalk,
) -> CircuitFamily:
    # Relabel columns so the constructed last circuit lands on the target walk.
    sigma_v, sigma_u = relabeling_onto(constructed_last, target)
    permuted = [apply_vertex_permutation(c, sigma_v, sigma_u) for c in circuits]
    result = CircuitFamily.build(shape, permuted, coefficients)
    if result.last_walk() != target:
        raise ConstructionError(f"relabeling produced {result.last_walk()}, expected {target}")
    return result


def lift_t(family: CircuitFamily) -> CircuitFamily:
    """
    Step (t, t+1) -> (t+1, t+1).

    The last circuit (v1,u2,...,v_t,u_{t+1}) is split into the 4-cycles
    (v1,u_j,v_{t+1},u_{j+1}) for j = 1..t and the long cycle
    (v1,u2,...,v_t,u_{t+1},v_{t+1},u1); these t+1 circuits sum to the old one,
    so each gets coefficient 1. Columns are then permuted so the long cycle
    becomes (v1,u1,...,v_{t+1},u_{t+1}).
    """
    t, r = family.shape.t, family.shape.r
    if t < 3 or r != t + 1:
        raise ConstructionError(f"lift_t needs shape (t, t+1) with t >= 3, got {family.shape}")
    _require_last(family, _staircase(family.shape, 1, t))

    lifted = BipartiteShape(t + 1, t + 1)
    circuits = [circuit.embed(lifted) for circuit in family.circuits[:-1]]
    for j in range(1, t + 1):
        circuits.append(walk_to_matrix(CircuitWalk.of(lifted, (1, j), (t + 1, j + 1))))
    closing = CircuitWalk(lifted, _staircase(lifted, 1, t).pairs + ((t + 1, 1),))
    circuits.append(walk_to_matrix(closing))
    coefficients = family.coefficients[:-1] + (1,) * (t + 1)

    result = _finish(lifted, circuits, coefficients, closing, _staircase(lifted, 0, t + 1))
    LOGGER.debug("lift_t %s -> %s: k %d -> %d", family.shape, lifted, len(family), len(result))
    return result


def extend_r(family: CircuitFamily) -> CircuitFamily:
    """
    Step (t, r) -> (t, r+1).

    The last circuit (v1,u_{r-t+1},...,v_t,u_r) is replaced by the t circuits
    obtained by moving one of its U-vertices u_{r-j+1} to u_{r+1}
    (j = 1..t). They sum to (t-1) times the old circuit, so earlier
    coefficients are multiplied by t-1 and the new ones are 1.
    """
    t, r = family.shape.t, family.shape.r
    if not r >= t >= 4:
        raise ConstructionError(f"extend_r needs r >= t >= 4, got {family.shape}")
    _require_last(family, _staircase(family.shape, r - t, t))

    wider = BipartiteShape(t, r + 1)
    circuits = [circuit.embed(wider) for circuit in family.circuits[:-1]]
    last = _staircase(wider, r - t, t)
    moved: list[CircuitWalk] = []
    for j in range(1, t + 1):
        old = r - j + 1
        moved.append(
            CircuitWalk(wider, tuple((i, r + 1 if u == old else u) for i, u in last.pairs))
        )
    circuits.extend(walk_to_matrix(walk) for walk in moved)
    coefficients = tuple((t - 1) * h for h in family.coefficients[:-1]) + (1,) * t

    result = _finish(wider, circuits, coefficients, moved[-1], _staircase(wider, r - t + 1, t))
    LOGGER.debug("extend_r %s -> %s: k %d -> %d", family.shape, wider, len(family), len(result))
    return result


def certificate_schedule(t: int, r: int) -> list[tuple[RecursionStep, BipartiteShape]]:
    """Recursion steps from the (3, 4) seed to (t, r), with the shape after each step."""
    if (t, r) == (3, 4):
        return []
    if not 4 <= t <= r:
        raise ConstructionError(f"certificates exist for 4 <= t <= r or (t, r) = (3, 4), got ({t}, {r})")
    steps = [(RecursionStep.LIFT_T, BipartiteShape(4, 4))]
    for s in range(4, t):
        steps.append((RecursionStep.EXTEND_R, BipartiteShape(s, s + 1)))
        steps.append((RecursionStep.LIFT_T, BipartiteShape(s + 1, s + 1)))
    for c in range(t + 1, r + 1):
        steps.append((RecursionStep.EXTEND_R, BipartiteShape(t, c)))
    return steps


def build_certificate(t: int, r: int) -> CircuitFamily:
    """Primitive relation on circuits of A_{t,r} with coefficient sum theorem_bound(t, r)."""
    family = seed_3x4()
    for step, shape in certificate_schedule(t, r):
        family = lift_t(family) if step is RecursionStep.LIFT_T else extend_r(family)
        if family.shape != shape:
            raise ConstructionError(f"{step} produced {family.shape}, expected {shape}")
        LOGGER.info("%s -> %s: %d circuits, coefficient sum %d", step, shape, len(family), family.total)
    return family
