from graver_certs.services.graver.circuits import matrix_circuits
from graver_certs.services.graver.completion import GraverBasis, graver_basis
from graver_certs.services.graver.complexity import graver_complexity
from graver_certs.services.graver.lawrence import BlockVector, lawrence_lift, type_of
from graver_certs.services.graver.limits import GraverLimits, ResourceLimitError
from graver_certs.services.graver.oracle import graver_basis_oracle
from graver_certs.services.graver.order import conforms, minimal_elements, normal_form

__all__ = [
    "BlockVector",
    "GraverBasis",
    "GraverLimits",
    "ResourceLimitError",
    "conforms",
    "graver_basis",
    "graver_basis_oracle",
    "graver_complexity",
    "lawrence_lift",
    "matrix_circuits",
    "minimal_elements",
    "normal_form",
    "type_of",
]
