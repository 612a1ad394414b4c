from graver_certs.services.bipartite.circuits import (
    CircuitError,
    CircuitMatrix,
    CircuitWalk,
    apply_vertex_permutation,
    circuit_violation,
    is_circuit,
    matrix_to_walk,
    relabeling_onto,
    walk_to_matrix,
)
from graver_certs.services.bipartite.enumerate import (
    enumerate_circuit_walks,
    enumerate_circuits,
    signed_circuit_count,
)
from graver_certs.services.bipartite.shape import BipartiteShape, incidence_matrix

__all__ = [
    "BipartiteShape",
    "CircuitError",
    "CircuitMatrix",
    "CircuitWalk",
    "apply_vertex_permutation",
    "circuit_violation",
    "enumerate_circuit_walks",
    "enumerate_circuits",
    "incidence_matrix",
    "is_circuit",
    "matrix_to_walk",
    "relabeling_onto",
    "signed_circuit_count",
    "walk_to_matrix",
]
