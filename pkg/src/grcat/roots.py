"""Exact arithmetic with complex roots of unity.

A root exp(2*pi*i * p/q) is stored as the reduced fraction p/q taken mod 1,
so multiplication of roots is addition of fractions and equality is
structural.  No floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class Root:
    """A root of unity, as its exponent in Q/Z (canonical representative in [0,1))."""

    exponent: Fraction

    def __post_init__(self):
        object.__setattr__(self, "exponent", Fraction(self.exponent) % 1)

    @staticmethod
    def one() -> "Root":
        return Root(Fraction(0))

    @staticmethod
    def of(num: int, den: int = 1) -> "Root":
        return Root(Fraction(num, den))

    @staticmethod
    def primitive(m: int) -> "Root":
        """A fixed primitive m-th root of unity, m >= 1."""
        if m < 1:
            raise ValueError("order must be >= 1")
        return Root(Fraction(1, m))

    @staticmethod
    def parse(text: str) -> "Root":
        num, _, den = text.partition("/")
        return Root(Fraction(int(num), int(den or "1")))

    @property
    def order(self) -> int:
        """Multiplicative order: the denominator of the reduced exponent."""
        return self.exponent.denominator

    def is_one(self) -> bool:
        return self.exponent == 0

    def __mul__(self, other: "Root") -> "Root":
        return Root(self.exponent + other.exponent)

    def __truediv__(self, other: "Root") -> "Root":
        return Root(self.exponent - other.exponent)

    def inv(self) -> "Root":
        return Root(-self.exponent)

    def __pow__(self, k: int) -> "Root":
        return Root(self.exponent * k)

    def __str__(self):
        return f"{self.exponent.numerator}/{self.exponent.denominator}"

    def __repr__(self):
        return f"Root({self})"


def canonical_root(a: Root, k: int) -> Root:
    """The deterministic k-th root num/(den*k) of a; any fixed section would do."""
    if k <= 0:
        raise ValueError("root index must be positive")
    return Root(Fraction(a.exponent.numerator, a.exponent.denominator * k))
