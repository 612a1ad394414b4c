from __future__ import annotations

import logging
from dataclasses import dataclass, field

from graver_certs.core.enums import CheckName
from graver_certs.schemas import LowerBoundCertificate
from graver_certs.services.bipartite.circuits import CircuitMatrix, circuit_violation
from graver_certs.services.bipartite.shape import BipartiteShape
from graver_certs.services.certificates.primitive import primitivity_failure

LOGGER = logging.getLogger(__name__)


@dataclass(slots=True)
class CheckFailure:
    check: CheckName
    detail: str

    def __str__(self) -> str:
        return f"{self.check}: {self.detail}"


@dataclass(slots=True)
class CheckReport:
    """Verdict of ``check_certificate``; valid exactly when no check failed."""

    failures: list[CheckFailure] = field(default_factory=list)
    certified_bound: int | None = None

    @property
    def valid(self) -> bool:
        return not self.failures and self.certified_bound is not None

    def failed_checks(self) -> list[CheckName]:
        return [failure.check for failure in self.failures]

    def render(self) -> str:
        if self.valid:
            return f"valid: true\ncertified bound: {self.certified_bound}\n"
        lines = ["valid: false"]
        lines.extend(f"failure: {failure}" for failure in self.failures)
        return "\n".join(lines) + "\n"


def _dimension_failures(certificate: LowerBoundCertificate) -> list[CheckFailure]:
    details: list[str] = []
    t, r = certificate.t, certificate.r
    if not isinstance(t, int) or not isinstance(r, int) or t < 2 or r < 2:
        return [CheckFailure(CheckName.DIMENSIONS, f"(t, r) = ({t}, {r}) is not a K_{{t,r}} shape")]
    circuits, coefficients = certificate.circuits, certificate.coefficients
    if not circuits:
        details.append("no circuits")
    if len(circuits) != len(coefficients):
        details.append(f"{len(coefficients)} coefficients for {len(circuits)} circuits")
    for index, circuit in enumerate(circuits, start=1):
        if len(circuit) != t or any(len(row) != r for row in circuit):
            details.append(f"circuit {index} is not a {t}x{r} matrix")
    for index, h in enumerate(coefficients, start=1):
        if not isinstance(h, int) or h <= 0:
            details.append(f"coefficient {index} is {h}, expected a positive integer")
    return [CheckFailure(CheckName.DIMENSIONS, detail) for detail in details]


def check_certificate(certificate: LowerBoundCertificate) -> CheckReport:
    """
    Verify a lower-bound certificate: dimensions, circuit shape of every
    matrix, the weighted sum, primitivity and finally the claimed bound.
    Failures are collected in check order; nothing here raises on bad content.
    """
    failures = _dimension_failures(certificate)
    if failures:
        return CheckReport(failures)

    shape = BipartiteShape(certificate.t, certificate.r)
    for index, rows in enumerate(certificate.circuits, start=1):
        reason = circuit_violation(shape, rows)
        if reason is not None:
            failures.append(CheckFailure(CheckName.NOT_A_CIRCUIT, f"circuit {index}: {reason}"))

    coefficients = list(certificate.coefficients)
    vectors = [CircuitMatrix.from_rows(shape, rows).to_vector() for rows in certificate.circuits]
    residual = [
        sum(h * vector[position] for h, vector in zip(coefficients, vectors))
        for position in range(shape.edge_count)
    ]
    nonzero = [(position, value) for position, value in enumerate(residual) if value]
    if nonzero:
        position, value = nonzero[0]
        i, j = position % shape.t + 1, position // shape.t + 1
        failures.append(
            CheckFailure(
                CheckName.RELATION_SUM,
                f"sum is {value} at (v{i},u{j}); {len(nonzero)} nonzero entries",
            )
        )
    else:
        reason = primitivity_failure(vectors, coefficients)
        if reason is not None:
            failures.append(CheckFailure(CheckName.NOT_PRIMITIVE, reason))

    total = sum(coefficients)
    if certificate.claimed_bound != total:
        failures.append(
            CheckFailure(
                CheckName.BOUND_MISMATCH,
                f"claimed {certificate.claimed_bound}, coefficients sum to {total}",
            )
        )

    if failures:
        LOGGER.info("certificate for K_%dx%d rejected: %d failures", shape.t, shape.r, len(failures))
        return CheckReport(failures)
    LOGGER.info("certificate for K_%dx%d certifies g >= %d", shape.t, shape.r, total)
    return CheckReport(certified_bound=total)
