"""Non-archimedean absolute values ``q**r`` with exact rational exponents."""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering


@total_ordering
class AbsVal:
    """Either the zero value or ``q**exponent`` with ``exponent`` rational.

    Values with different ``q`` are not comparable.
    """

    __slots__ = ("q", "exponent")

    def __init__(self, q: int, exponent: Fraction | int | None):
        self.q = q
        self.exponent = None if exponent is None else Fraction(exponent)

    @classmethod
    def zero(cls, q: int) -> AbsVal:
        return cls(q, None)

    @property
    def is_zero(self) -> bool:
        return self.exponent is None

    def _check(self, other: AbsVal) -> None:
        if not isinstance(other, AbsVal):
            raise TypeError(f"cannot combine AbsVal with {type(other).__name__}")
        if other.q != self.q:
            raise ValueError(f"absolute values for q={self.q} and q={other.q} do not mix")

    def __mul__(self, other: AbsVal) -> AbsVal:
        self._check(other)
        if self.is_zero or other.is_zero:
            return AbsVal.zero(self.q)
        return AbsVal(self.q, self.exponent + other.exponent)

    def __truediv__(self, other: AbsVal) -> AbsVal:
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("division by the zero absolute value")
        if self.is_zero:
            return self
        return AbsVal(self.q, self.exponent - other.exponent)

    def __pow__(self, e: int | Fraction) -> AbsVal:
        if self.is_zero:
            if e <= 0:
                raise ZeroDivisionError("zero absolute value to a non-positive power")
            return self
        return AbsVal(self.q, self.exponent * Fraction(e))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AbsVal):
            return NotImplemented
        return self.q == other.q and self.exponent == other.exponent

    def __lt__(self, other: AbsVal) -> bool:
        self._check(other)
        if self.is_zero:
            return not other.is_zero
        if other.is_zero:
            return False
        return self.exponent < other.exponent

    def __hash__(self) -> int:
        return hash((self.q, self.exponent))

    def __float__(self) -> float:
        return 0.0 if self.is_zero else float(self.q) ** float(self.exponent)

    def __repr__(self) -> str:
        return f"AbsVal(q={self.q}, exponent={self.exponent})"

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return f"q^({self.exponent})"


def max_abs(values) -> AbsVal:
    """Maximum of a non-empty iterable of absolute values."""
    it = iter(values)
    best = next(it)
    for v in it:
        if v > best:
            best = v
    return best
