from graver_certs.services.linalg.elimination import (
    gcd_of,
    integer_kernel_basis,
    l1_norm,
    primitive_part,
    rank,
)
from graver_certs.services.linalg.matrix import (
    IntMatrix,
    IntVector,
    MatrixParseError,
    parse_matrix_text,
)

__all__ = [
    "IntMatrix",
    "IntVector",
    "MatrixParseError",
    "gcd_of",
    "integer_kernel_basis",
    "l1_norm",
    "parse_matrix_text",
    "primitive_part",
    "rank",
]
