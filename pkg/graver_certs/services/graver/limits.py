from __future__ import annotations

from dataclasses import dataclass

from graver_certs.config import Settings, get_settings


class ResourceLimitError(RuntimeError):
    """Raised when an exact computation would exceed a configured cap."""

    def __init__(self, limit: str, value: int) -> None:
        self.limit = limit
        self.value = value
        super().__init__(
            f"resource limit exceeded: {limit}={value}; "
            "the input is too large for desk-scale exact computation"
        )


@dataclass(frozen=True, slots=True)
class GraverLimits:
    max_elements: int = 100_000
    max_pair_reductions: int = 10_000_000
    oracle_max_vectors: int = 5_000_000
    max_enumerated_circuits: int = 1_000_000

    @classmethod
    def from_settings(cls, settings: Settings | None = None) -> GraverLimits:
        settings = settings or get_settings()
        return cls(
            max_elements=settings.max_elements,
            max_pair_reductions=settings.max_pair_reductions,
            oracle_max_vectors=settings.oracle_max_vectors,
            max_enumerated_circuits=settings.max_enumerated_circuits,
        )
