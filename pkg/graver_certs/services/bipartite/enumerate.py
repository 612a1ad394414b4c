from __future__ import annotations

import itertools
import logging
from math import comb, factorial, perm

from graver_certs.services.bipartite.circuits import CircuitMatrix, CircuitWalk, walk_to_matrix
from graver_certs.services.bipartite.shape import BipartiteShape
from graver_certs.services.graver.limits import GraverLimits, ResourceLimitError

LOGGER = logging.getLogger(__name__)


def signed_circuit_count(shape: BipartiteShape) -> int:
    """Number of oriented cycles of K_{t,r}."""
    return sum(
        comb(shape.t, k) * factorial(k - 1) * perm(shape.r, k)
        for k in range(2, min(shape.t, shape.r) + 1)
    )


def enumerate_circuit_walks(
    shape: BipartiteShape,
    limits: GraverLimits | None = None,
) -> list[CircuitWalk]:
    """
    Every oriented cycle of K_{t,r} once, as a normalized walk.

    For each choice of k V-vertices the walk starts at the smallest one and
    visits the remaining ones in every order; the U-vertices run over all
    ordered selections of k. Sorted by (length, pairs).
    """
    limits = limits or GraverLimits.from_settings()
    total = signed_circuit_count(shape)
    if total > limits.max_enumerated_circuits:
        raise ResourceLimitError("max_enumerated_circuits", limits.max_enumerated_circuits)

    walks: list[CircuitWalk] = []
    for k in range(2, min(shape.t, shape.r) + 1):
        for chosen in itertools.combinations(range(1, shape.t + 1), k):
            first, rest = chosen[0], chosen[1:]
            for order in itertools.permutations(rest):
                lefts = (first,) + order
                for rights in itertools.permutations(range(1, shape.r + 1), k):
                    walks.append(CircuitWalk(shape, tuple(zip(lefts, rights))))
    walks.sort(key=CircuitWalk.sort_key)
    LOGGER.debug("enumerated %d signed circuits of K_%s", len(walks), shape)
    return walks


def enumerate_circuits(
    shape: BipartiteShape,
    limits: GraverLimits | None = None,
) -> list[CircuitMatrix]:
    return [walk_to_matrix(walk) for walk in enumerate_circuit_walks(shape, limits)]
