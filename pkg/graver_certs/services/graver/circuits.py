from __future__ import annotations

import itertools
import logging
from math import comb

from graver_certs.services.graver.limits import GraverLimits, ResourceLimitError
from graver_certs.services.linalg.elimination import integer_kernel_basis, primitive_part, rank
from graver_certs.services.linalg.matrix import IntMatrix, IntVector, negate

LOGGER = logging.getLogger(__name__)


def matrix_circuits(matrix: IntMatrix, limits: GraverLimits | None = None) -> list[IntVector]:
    """
    Circuits of a matrix: kernel vectors with inclusion-minimal support and
    coprime entries, both signs, in lexicographic order.

    A column subset S supports a circuit exactly when the columns in S have a
    one-dimensional kernel whose generator uses every column of S.
    """
    limits = limits or GraverLimits.from_settings()
    width = matrix.n_cols
    largest = min(width, rank(matrix) + 1)
    subsets = sum(comb(width, size) for size in range(1, largest + 1))
    if subsets > limits.max_enumerated_circuits:
        raise ResourceLimitError("max_enumerated_circuits", limits.max_enumerated_circuits)

    columns = matrix.columns()
    found: set[IntVector] = set()
    for size in range(1, largest + 1):
        for support in itertools.combinations(range(width), size):
            restricted = IntMatrix.from_columns([columns[j] for j in support])
            kernel = integer_kernel_basis(restricted)
            if len(kernel) != 1 or not all(kernel[0]):
                continue
            full = [0] * width
            for position, value in zip(support, primitive_part(kernel[0])):
                full[position] = value
            circuit = tuple(full)
            found.add(circuit)
            found.add(negate(circuit))
    LOGGER.debug("found %d signed circuits over %d column subsets", len(found), subsets)
    return sorted(found)
