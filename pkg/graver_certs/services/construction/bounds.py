from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from graver_certs.services.construction.family import ConstructionError


@dataclass(frozen=True, slots=True)
class BoundValue:
    """Exact rational value in lowest terms."""

    numerator: int
    denominator: int = 1

    @classmethod
    def of(cls, value: Fraction | int) -> BoundValue:
        value = Fraction(value)
        return cls(value.numerator, value.denominator)

    @property
    def is_integral(self) -> bool:
        return self.denominator == 1

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def __int__(self) -> int:
        if not self.is_integral:
            raise ArithmeticError(f"{self} is not an integer")
        return self.numerator

    def __str__(self) -> str:
        if self.is_integral:
            return str(self.numerator)
        return f"{self.numerator}/{self.denominator}"


def _integral(value: Fraction, label: str) -> BoundValue:
    bound = BoundValue.of(value)
    if not bound.is_integral:
        raise ArithmeticError(f"{label} evaluated to non-integer {bound}")
    return bound


def b_value(t: int) -> BoundValue:
    """b_t = (t-2)! * (15 + sum_{i=1}^{t-4} (i+4)/(i+2)!), the coefficient sum at (t, t)."""
    if t < 4:
        raise ConstructionError(f"b_t is defined for t >= 4, got {t}")
    tail = sum((Fraction(i + 4, factorial(i + 2)) for i in range(1, t - 3)), Fraction(0))
    return _integral(factorial(t - 2) * (15 + tail), f"b_{t}")


def theorem_bound(t: int, r: int) -> BoundValue:
    """
    Lower bound on g(A_{t,r}).

    t >= 4, r >= t: (t-1)^(r-t) * (b_t + 1/(t-2)) - 1/(t-2).
    t = 3, r >= 3: 17 * 2^(r-3) - 7.
    """
    if t == 3 and r >= 3:
        return BoundValue.of(17 * 2 ** (r - 3) - 7)
    if t >= 4 and r >= t:
        shift = Fraction(1, t - 2)
        value = (t - 1) ** (r - t) * (b_value(t).as_fraction() + shift) - shift
        return _integral(value, f"bound({t}, {r})")
    raise ConstructionError(f"no bound for (t, r) = ({t}, {r}); need 4 <= t <= r or t = 3 <= r")
