from graver_certs.services.certificates.checker import CheckFailure, CheckReport, check_certificate
from graver_certs.services.certificates.codec import (
    CertificateParseError,
    certificate_from_family,
    family_from_certificate,
    parse_certificate,
    serialize_certificate,
)
from graver_certs.services.certificates.primitive import (
    is_primitive_relation,
    primitivity_failure,
    relation_kernel_generator,
)
from graver_certs.services.certificates.witness import lawrence_witness, witness_matrix

__all__ = [
    "CertificateParseError",
    "CheckFailure",
    "CheckReport",
    "certificate_from_family",
    "check_certificate",
    "family_from_certificate",
    "is_primitive_relation",
    "lawrence_witness",
    "parse_certificate",
    "primitivity_failure",
    "relation_kernel_generator",
    "serialize_certificate",
    "witness_matrix",
]
