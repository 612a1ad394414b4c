from __future__ import annotations

import logging

from graver_certs.services.graver.completion import graver_basis
from graver_certs.services.graver.limits import GraverLimits
from graver_certs.services.linalg.matrix import IntMatrix

LOGGER = logging.getLogger(__name__)


def graver_complexity(matrix: IntMatrix, limits: GraverLimits | None = None) -> int:
    """
    g(A) as the largest 1-norm in the Graver basis of the matrix whose columns
    are the Graver basis elements of A (in canonical order).
    """
    limits = limits or GraverLimits.from_settings()
    first = graver_basis(matrix, limits)
    if not first.elements:
        return 0
    stacked = IntMatrix.from_columns(first.sorted_elements())
    LOGGER.info("second-stage matrix is %dx%d", stacked.n_rows, stacked.n_cols)
    second = graver_basis(stacked, limits)
    return second.max_norm()
