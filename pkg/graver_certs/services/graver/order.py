from __future__ import annotations

from typing import Iterable, Sequence

from graver_certs.services.linalg.elimination import l1_norm
from graver_certs.services.linalg.matrix import IntVector


def conforms(u: Sequence[int], v: Sequence[int]) -> bool:
    """True iff u ⊑ v: |u_i| <= |v_i| and u_i * v_i >= 0 for every i."""
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} != {len(v)}")
    for a, b in zip(u, v):
        if a == 0:
            continue
        if a * b < 0 or abs(a) > abs(b):
            return False
    return True


def sign_compatible(u: Sequence[int], v: Sequence[int]) -> bool:
    return all(a * b >= 0 for a, b in zip(u, v))


def normal_form(vector: IntVector, reducers: Sequence[IntVector]) -> IntVector:
    """Subtract conforming reducers from ``vector`` until none conforms."""
    current = vector
    while any(current):
        for reducer in reducers:
            if conforms(reducer, current):
                current = tuple(a - b for a, b in zip(current, reducer))
                break
        else:
            return current
    return current


def minimal_elements(vectors: Iterable[IntVector]) -> list[IntVector]:
    """
    Keep the ⊑-minimal nonzero vectors.

    Candidates are visited by increasing 1-norm, so a vector only needs to be
    compared with the minimal ones accepted before it.
    """
    ordered = sorted({v for v in vectors if any(v)}, key=lambda v: (l1_norm(v), v))
    accepted: list[IntVector] = []
    for candidate in ordered:
        if not any(conforms(kept, candidate) for kept in accepted):
            accepted.append(candidate)
    return sorted(accepted)
