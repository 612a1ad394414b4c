from __future__ import annotations

import logging
import math
from typing import Sequence

from graver_certs.services.linalg.matrix import IntMatrix, IntVector

LOGGER = logging.getLogger(__name__)


def gcd_of(vector: Sequence[int]) -> int:
    """Greatest common divisor of the absolute entries; 0 for the zero vector."""
    return math.gcd(*vector)


def l1_norm(vector: Sequence[int]) -> int:
    return sum(abs(value) for value in vector)


def primitive_part(vector: Sequence[int]) -> IntVector:
    """Divide out the content and make the first nonzero entry positive."""
    divisor = gcd_of(vector)
    if divisor == 0:
        return tuple(vector)
    lead = next(value for value in vector if value)
    if lead < 0:
        divisor = -divisor
    return tuple(value // divisor for value in vector)


def integer_kernel_basis(matrix: IntMatrix) -> list[IntVector]:
    """
    Return a lattice basis of ker_Z(matrix).

    The columns of ``matrix`` become rows of a work array augmented with the
    identity. Unimodular row operations bring the left part into echelon form;
    the identity part of every row whose left part vanished is then a kernel
    vector, and together they generate the whole integer kernel because the
    accumulated transformation is invertible over Z.
    """
    height, width = matrix.n_rows, matrix.n_cols
    work = [
        list(matrix.column(j)) + [1 if k == j else 0 for k in range(width)]
        for j in range(width)
    ]

    pivot_row = 0
    for col in range(height):
        if pivot_row == width:
            break
        while True:
            candidates = [i for i in range(pivot_row, width) if work[i][col]]
            if not candidates:
                break
            best = min(candidates, key=lambda i: abs(work[i][col]))
            work[pivot_row], work[best] = work[best], work[pivot_row]
            pivot = work[pivot_row]
            cleared = True
            for i in range(pivot_row + 1, width):
                value = work[i][col]
                if not value:
                    continue
                quotient = value // pivot[col]
                work[i] = [a - quotient * b for a, b in zip(work[i], pivot)]
                if work[i][col]:
                    cleared = False
            if cleared:
                pivot_row += 1
                break

    basis = [_lead_positive(tuple(row[height:])) for row in work[pivot_row:]]
    LOGGER.debug("kernel of %dx%d matrix has rank %d", height, width, len(basis))
    return basis


def rank(matrix: IntMatrix) -> int:
    """Rank over Q by fraction-free (Bareiss) elimination."""
    work = [list(row) for row in matrix.rows()]
    height, width = matrix.n_rows, matrix.n_cols
    previous = 1
    current = 0
    for col in range(width):
        if current == height:
            break
        pivot = next((i for i in range(current, height) if work[i][col]), None)
        if pivot is None:
            continue
        work[current], work[pivot] = work[pivot], work[current]
        lead = work[current][col]
        for i in range(current + 1, height):
            below = work[i][col]
            row = work[i]
            for j in range(col + 1, width):
                # Sylvester's identity makes this division exact.
                row[j] = (lead * row[j] - below * work[current][j]) // previous
            row[col] = 0
        previous = lead
        current += 1
    return current


def _lead_positive(vector: IntVector) -> IntVector:
    lead = next((value for value in vector if value), 0)
    if lead < 0:
        return tuple(-value for value in vector)
    return vector
