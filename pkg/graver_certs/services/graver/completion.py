from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from typing import Iterator

from graver_certs.services.graver.limits import GraverLimits, ResourceLimitError
from graver_certs.services.graver.order import (
    minimal_elements,
    normal_form,
    sign_compatible,
)
from graver_certs.services.linalg.elimination import integer_kernel_basis, l1_norm
from graver_certs.services.linalg.matrix import IntMatrix, IntVector, add, negate

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class GraverBasis:
    """The ⊑-minimal nonzero kernel vectors of ``source_matrix``, both signs stored."""

    elements: frozenset[IntVector]
    source_matrix: IntMatrix

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[IntVector]:
        return iter(self.sorted_elements())

    def __contains__(self, vector: object) -> bool:
        return vector in self.elements

    def sorted_elements(self) -> list[IntVector]:
        """Canonical lexicographic order, used for column indexing."""
        return sorted(self.elements)

    def max_norm(self) -> int:
        return max((l1_norm(v) for v in self.elements), default=0)


def graver_basis(matrix: IntMatrix, limits: GraverLimits | None = None) -> GraverBasis:
    """
    Graver basis by completion.

    The queue starts with the kernel basis and its negation. Each dequeued
    vector is reduced to normal form against the elements found so far; a
    nonzero remainder is kept and its sums with all earlier elements are
    queued. Sums of sign-compatible pairs are skipped since they reduce to
    zero. A final sweep drops every element that another one conforms to.
    """
    limits = limits or GraverLimits.from_settings()
    seeds = integer_kernel_basis(matrix)
    if not seeds:
        return GraverBasis(frozenset(), matrix)

    queue: deque[IntVector] = deque()
    for vector in seeds:
        queue.append(vector)
        queue.append(negate(vector))

    elements: list[IntVector] = []
    reductions = 0
    while queue:
        candidate = queue.popleft()
        reductions += 1
        if reductions > limits.max_pair_reductions:
            raise ResourceLimitError("max_pair_reductions", limits.max_pair_reductions)
        remainder = normal_form(candidate, elements)
        if not any(remainder):
            continue
        for element in elements:
            if not sign_compatible(remainder, element):
                queue.append(add(remainder, element))
        elements.append(remainder)
        if len(elements) > limits.max_elements:
            raise ResourceLimitError("max_elements", limits.max_elements)

    minimal = minimal_elements(elements)
    LOGGER.info(
        "Graver basis of %dx%d matrix: %d elements (%d before auto-reduction, %d reductions)",
        matrix.n_rows,
        matrix.n_cols,
        len(minimal),
        len(elements),
        reductions,
    )
    return GraverBasis(frozenset(minimal), matrix)
