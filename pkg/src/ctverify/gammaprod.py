"""Exact Gamma arithmetic at positive half-integer arguments.

Gamma values at half-integers are rational multiples of a power of sqrt(pi):

    Gamma(n)       = (n-1)!                      (integer n >= 1)
    Gamma(k + 1/2) = (2k)! / (4^k k!) * sqrt(pi) (integer k >= 0)

so every value manipulated here is an exact number r * pi^(p/2) with r a
rational and p an integer (the PiPower type).  The closed-form side of the
Morris-type product formulas is evaluated entirely in this representation;
its accumulated pi-power must cancel to exactly 0, and that cancellation is
asserted rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .identities import MorrisParams

__all__ = [
    "HalfInteger",
    "PiPower",
    "PiCancellationError",
    "gamma_half",
    "morris_rhs",
    "morris_rhs_pipower",
    "morris_ratio",
    "legendre_duplication_check",
    "legendre_duplication_sides",
]


class PiCancellationError(ArithmeticError):
    """A product that must be rational ended up with a nonzero pi-power."""


@dataclass(frozen=True, order=True)
class HalfInteger:
    """An element of (1/2)Z, stored as twice its value."""

    twice: int

    @classmethod
    def from_int(cls, k: int) -> "HalfInteger":
        return cls(2 * k)

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def as_fraction(self) -> Fraction:
        return Fraction(self.twice, 2)

    def __add__(self, other: "HalfInteger") -> "HalfInteger":
        return HalfInteger(self.twice + other.twice)

    def __str__(self) -> str:
        return str(self.as_fraction())


@dataclass(frozen=True)
class PiPower:
    """The exact number r * pi^(p/2); r = 0 is normalized to p = 0."""

    r: Fraction
    p: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "r", Fraction(self.r))
        if self.r == 0:
            object.__setattr__(self, "p", 0)

    def __mul__(self, other: "PiPower | Fraction | int") -> "PiPower":
        if isinstance(other, PiPower):
            return PiPower(self.r * other.r, self.p + other.p)
        return PiPower(self.r * other, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other: "PiPower | Fraction | int") -> "PiPower":
        if isinstance(other, PiPower):
            return PiPower(self.r / other.r, self.p - other.p)
        return PiPower(self.r / Fraction(other), self.p)

    def __str__(self) -> str:
        if self.p == 0:
            return str(self.r)
        return f"{self.r}*pi^({self.p}/2)"


def gamma_half(z: HalfInteger) -> PiPower:
    """Gamma(z) for a positive half-integer z, as an exact PiPower."""
    if z.twice <= 0:
        raise ValueError(f"gamma_half requires z > 0, got z={z}")
    if z.is_integer:
        return PiPower(Fraction(factorial(z.twice // 2 - 1)), 0)
    k = (z.twice - 1) // 2
    return PiPower(Fraction(factorial(2 * k), 4**k * factorial(k)), 1)


def morris_rhs_pipower(n: int, params: MorrisParams) -> PiPower:
    """The Morris product-formula value for the parameters, kept as a PiPower.

    With c = m/2 the value is

        (1/n!) * prod_{j=0}^{n-1}  Gamma(a+b+(n-1+j)c) Gamma(c)
                                  / ( Gamma(a+jc) Gamma(c+jc) Gamma(b+jc+1) ),

    evaluated exactly.  The theorem being verified says this is rational, so
    the returned pi-power is expected (but not forced) to be 0; morris_rhs is
    the checked rational version.
    """
    if n < 0:
        raise ValueError(f"morris_rhs requires n >= 0, got n={n}")
    a, b, m = params.a, params.b, params.m
    acc = PiPower(Fraction(1, factorial(n)))
    for j in range(n):
        # arguments in units of 1/2: c = m/2
        num = gamma_half(HalfInteger(2 * (a + b) + (n - 1 + j) * m)) * gamma_half(
            HalfInteger(m)
        )
        den = (
            gamma_half(HalfInteger(2 * a + j * m))
            * gamma_half(HalfInteger((1 + j) * m))
            * gamma_half(HalfInteger(2 * b + j * m + 2))
        )
        acc = acc * num / den
    return acc


def morris_rhs(n: int, params: MorrisParams) -> Fraction:
    """Checked rational value of the Morris product formula.

    Raises PiCancellationError if the pi-powers fail to cancel, which would
    indicate an argument-bookkeeping bug, never a property of valid inputs.
    """
    value = morris_rhs_pipower(n, params)
    if value.p != 0:
        raise PiCancellationError(
            f"residual pi-power {value.p} in product formula at n={n}, {params}"
        )
    return value.r


def morris_ratio(n: int, params: MorrisParams) -> Fraction:
    """Ratio of consecutive product-formula values, morris_rhs(n)/morris_rhs(n-1)."""
    if n < 1:
        raise ValueError(f"morris_ratio requires n >= 1, got n={n}")
    return morris_rhs(n, params) / morris_rhs(n - 1, params)


def legendre_duplication_sides(z: HalfInteger) -> tuple[PiPower, PiPower]:
    """Both sides of Gamma(z)Gamma(z+1/2) = Gamma(2z)Gamma(1/2) / 2^(2z-1).

    2z-1 is an integer for half-integer z, so the right side is an exact
    PiPower as well.
    """
    if z.twice <= 0:
        raise ValueError(f"duplication check requires z > 0, got z={z}")
    lhs = gamma_half(z) * gamma_half(HalfInteger(z.twice + 1))
    rhs = (
        gamma_half(HalfInteger(2 * z.twice))
        * gamma_half(HalfInteger(1))
        / Fraction(2) ** (z.twice - 1)
    )
    return lhs, rhs


def legendre_duplication_check(z: HalfInteger) -> bool:
    """Exact equality test of the duplication formula at z."""
    lhs, rhs = legendre_duplication_sides(z)
    return lhs == rhs
