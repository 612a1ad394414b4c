from __future__ import annotations

from pydantic import ValidationError

from graver_certs.schemas import LowerBoundCertificate
from graver_certs.services.bipartite.circuits import CircuitMatrix
from graver_certs.services.bipartite.shape import BipartiteShape
from graver_certs.services.construction.family import CircuitFamily


class CertificateParseError(ValueError):
    """Raised when certificate text is malformed or structurally inconsistent."""

    def __init__(self, problems: list[str]) -> None:
        self.problems = problems
        super().__init__("invalid certificate: " + "; ".join(problems))

    @classmethod
    def from_validation(cls, exc: ValidationError) -> CertificateParseError:
        problems = []
        for error in exc.errors():
            location = ".".join(str(part) for part in error["loc"]) or "<document>"
            problems.append(f"{location}: {error['msg']}")
        return cls(problems)


def serialize_certificate(certificate: LowerBoundCertificate) -> str:
    return certificate.model_dump_json(indent=2, exclude_none=True) + "\n"


def parse_certificate(text: str | bytes) -> LowerBoundCertificate:
    try:
        return LowerBoundCertificate.model_validate_json(text)
    except ValidationError as exc:
        raise CertificateParseError.from_validation(exc) from exc


def certificate_from_family(family: CircuitFamily, include_walks: bool = True) -> LowerBoundCertificate:
    walks = None
    if include_walks:
        walks = [[[i, j] for i, j in walk.pairs] for walk in family.walks()]
    return LowerBoundCertificate(
        t=family.shape.t,
        r=family.shape.r,
        circuits=[circuit.rows() for circuit in family.circuits],
        coefficients=list(family.coefficients),
        claimed_bound=family.total,
        walks=walks,
    )


def family_from_certificate(certificate: LowerBoundCertificate) -> CircuitFamily:
    """Rebuild the circuit family; the matrices are taken as given, not checked."""
    shape = BipartiteShape(certificate.t, certificate.r)
    circuits = [CircuitMatrix.from_rows(shape, rows) for rows in certificate.circuits]
    return CircuitFamily.build(shape, circuits, certificate.coefficients)
