"""Exact half-integers and rational q-exponents on the 1/24 lattice."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

#: Common denominator of every q-exponent that occurs in the series of this
#: package (lcm of 24 from eta, 8 from the weight-1/2 prefactors, 4 and 2
#: from the quadratic exponents).
LATTICE_DEN = 24


@dataclass(frozen=True, order=True)
class HalfInt:
    """An element of (1/2)Z, stored as twice its value so parity stays exact."""

    twice: int

    def __post_init__(self):
        if not isinstance(self.twice, int):
            raise TypeError("HalfInt stores twice its value as an int")

    @classmethod
    def of(cls, value) -> "HalfInt":
        """Coerce an int, a rational with denominator 1 or 2, or a HalfInt."""
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, bool):
            raise TypeError("bool is not a half-integer")
        if isinstance(value, int):
            return cls(2 * value)
        if isinstance(value, Rational):
            fr = Fraction(value)
            if fr.denominator not in (1, 2):
                raise ValueError(f"{value} is not a half-integer")
            return cls(fr.numerator * (2 // fr.denominator))
        raise TypeError(f"cannot interpret {value!r} as a half-integer")

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    @property
    def is_half_odd(self) -> bool:
        return self.twice % 2 != 0

    def as_fraction(self) -> Fraction:
        return Fraction(self.twice, 2)

    def square(self) -> Fraction:
        return Fraction(self.twice * self.twice, 4)

    def __float__(self) -> float:
        return self.twice / 2.0

    def __int__(self) -> int:
        if not self.is_integer:
            raise ValueError(f"{self} is not an integer")
        return self.twice // 2

    def __add__(self, other):
        return HalfInt(self.twice + HalfInt.of(other).twice)

    __radd__ = __add__

    def __sub__(self, other):
        return HalfInt(self.twice - HalfInt.of(other).twice)

    def __rsub__(self, other):
        return HalfInt(HalfInt.of(other).twice - self.twice)

    def __neg__(self):
        return HalfInt(-self.twice)

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return HalfInt(self.twice * other)
        # product of two half-integers lands in (1/4)Z in general
        return self.as_fraction() * HalfInt.of(other).as_fraction()

    __rmul__ = __mul__

    def __str__(self) -> str:
        if self.is_integer:
            return str(self.twice // 2)
        return f"{self.twice}/2"


def half(numerator: int) -> HalfInt:
    """Shorthand for HalfInt(numerator), i.e. numerator/2."""
    return HalfInt(numerator)


@dataclass(frozen=True, order=True)
class QExp:
    """An exact q-exponent n/24 on the shared fractional-power lattice."""

    num24: int

    def __post_init__(self):
        if not isinstance(self.num24, int):
            raise TypeError("QExp stores 24x the exponent as an int")

    @classmethod
    def of(cls, value) -> "QExp":
        if isinstance(value, QExp):
            return value
        if isinstance(value, HalfInt):
            fr = value.as_fraction()
        else:
            fr = Fraction(value)
        scaled = fr * LATTICE_DEN
        if scaled.denominator != 1:
            raise ValueError(f"{value} is not on the 1/{LATTICE_DEN} exponent lattice")
        return cls(int(scaled))

    def as_fraction(self) -> Fraction:
        return Fraction(self.num24, LATTICE_DEN)

    def __float__(self) -> float:
        return self.num24 / LATTICE_DEN

    def __add__(self, other):
        return QExp(self.num24 + QExp.of(other).num24)

    __radd__ = __add__

    def __sub__(self, other):
        return QExp(self.num24 - QExp.of(other).num24)

    def __rsub__(self, other):
        return QExp(QExp.of(other).num24 - self.num24)

    def __neg__(self):
        return QExp(-self.num24)

    def __mul__(self, other: int):
        if not isinstance(other, int):
            return NotImplemented
        return QExp(self.num24 * other)

    __rmul__ = __mul__

    def __str__(self) -> str:
        return f"{self.num24}/{LATTICE_DEN}"
