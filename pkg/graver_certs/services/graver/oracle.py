from __future__ import annotations

import itertools
import logging

from graver_certs.services.graver.completion import GraverBasis
from graver_certs.services.graver.limits import GraverLimits, ResourceLimitError
from graver_certs.services.graver.order import minimal_elements
from graver_certs.services.linalg.matrix import IntMatrix, IntVector

LOGGER = logging.getLogger(__name__)


def graver_basis_oracle(
    matrix: IntMatrix,
    bound: int,
    limits: GraverLimits | None = None,
) -> GraverBasis:
    """
    Brute-force Graver basis restricted to the box [-bound, bound]^n.

    A box vector that is ⊑-minimal among box kernel vectors is ⊑-minimal in
    the whole kernel, because everything below it lies in the box too. The
    result is therefore always a subset of the true Graver basis, and equal
    to it when every Graver element fits in the box.
    """
    if bound < 1:
        raise ValueError(f"bound must be positive, got {bound}")
    limits = limits or GraverLimits.from_settings()
    total = (2 * bound + 1) ** matrix.n_cols
    if total > limits.oracle_max_vectors:
        raise ResourceLimitError("oracle_max_vectors", limits.oracle_max_vectors)

    rows = [row for row in matrix.rows() if any(row)]
    kernel: list[IntVector] = []
    for vector in itertools.product(range(-bound, bound + 1), repeat=matrix.n_cols):
        if all(sum(a * b for a, b in zip(row, vector)) == 0 for row in rows):
            kernel.append(vector)

    minimal = minimal_elements(kernel)
    LOGGER.debug("oracle scanned %d vectors, %d in kernel, %d minimal", total, len(kernel), len(minimal))
    return GraverBasis(frozenset(minimal), matrix)
