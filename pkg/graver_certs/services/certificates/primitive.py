from __future__ import annotations

from typing import Sequence

from graver_certs.services.linalg.elimination import (
    gcd_of,
    integer_kernel_basis,
    primitive_part,
    rank,
)
from graver_certs.services.linalg.matrix import IntMatrix, IntVector


def _validate(vectors: Sequence[Sequence[int]], coefficients: Sequence[int]) -> None:
    if not vectors or len(vectors) != len(coefficients):
        raise ValueError(
            f"dimension mismatch: {len(vectors)} vectors, {len(coefficients)} coefficients"
        )
    length = len(vectors[0])
    if length == 0 or any(len(vector) != length for vector in vectors):
        raise ValueError("dimension mismatch: vectors must share a positive length")


def relation_kernel_generator(vectors: Sequence[Sequence[int]]) -> IntVector | None:
    """Generator of the integer relations among ``vectors`` when they form a line, else None."""
    kernel = integer_kernel_basis(IntMatrix.from_columns(vectors))
    if len(kernel) != 1:
        return None
    return primitive_part(kernel[0])


def primitivity_failure(
    vectors: Sequence[Sequence[int]],
    coefficients: Sequence[int],
) -> str | None:
    """Reason why ``coefficients`` is not a primitive relation on ``vectors``, or None."""
    _validate(vectors, coefficients)
    k = len(vectors)
    if any(h <= 0 for h in coefficients):
        return "coefficients must be positive"
    common = gcd_of(coefficients)
    if common != 1:
        return f"coefficients share the factor {common}"
    for position in range(len(vectors[0])):
        if sum(h * vector[position] for h, vector in zip(coefficients, vectors)):
            return f"weighted sum is nonzero at position {position}"

    found = rank(IntMatrix.from_columns(vectors))
    if found != k - 1:
        return f"vectors span rank {found}, expected {k - 1}"
    # With rank k-1 the relations form a line; full support of its generator
    # means every k-1 of the vectors are independent.
    generator = relation_kernel_generator(vectors)
    if generator is None or not all(generator):
        return "some k-1 of the vectors are linearly dependent"
    return None


def is_primitive_relation(vectors: Sequence[Sequence[int]], coefficients: Sequence[int]) -> bool:
    return primitivity_failure(vectors, coefficients) is None
