from __future__ import annotations

from graver_certs.services.bipartite.shape import incidence_matrix
from graver_certs.services.construction.family import CircuitFamily
from graver_certs.services.graver.lawrence import BlockVector, lawrence_lift
from graver_certs.services.linalg.matrix import IntMatrix


def lawrence_witness(family: CircuitFamily) -> BlockVector:
    """
    Block vector with h_1 copies of x^1, then h_2 copies of x^2, and so on.
    For a primitive relation this is a Graver element of type sum(h) of the
    sum(h)-th Lawrence lifting of the incidence matrix.
    """
    blocks = []
    for h, circuit in zip(family.coefficients, family.circuits):
        blocks.extend([circuit.to_vector()] * h)
    return BlockVector.from_blocks(blocks)


def witness_matrix(family: CircuitFamily) -> IntMatrix:
    return lawrence_lift(incidence_matrix(family.shape), family.total)
