"""Coefficient functions of the expansion engine: rational functions of
y = e^{pi i z} over Q(i), stored as gcd-reduced Laurent-numerator /
monic-polynomial-denominator pairs."""

from __future__ import annotations

import cmath
from typing import Dict

from .gaussian import GR_ONE, GR_ZERO, GaussianRational


class LaurentPoly:
    """Laurent polynomial in y over Q(i); zero coefficients are never stored."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Dict[int, GaussianRational] | None = None):
        self.coeffs = {d: c for d, c in (coeffs or {}).items() if c}

    @classmethod
    def monomial(cls, degree: int, coeff=GR_ONE) -> "LaurentPoly":
        coeff = GaussianRational.of(coeff)
        p = cls.__new__(cls)
        p.coeffs = {degree: coeff} if coeff else {}
        return p

    @classmethod
    def zero(cls) -> "LaurentPoly":
        p = cls.__new__(cls)
        p.coeffs = {}
        return p

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls.monomial(0)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs.get(0) == GR_ONE

    @property
    def is_monomial(self) -> bool:
        return len(self.coeffs) == 1

    def min_degree(self) -> int:
        return min(self.coeffs)

    def max_degree(self) -> int:
        return max(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.coeffs)
        for d, c in other.coeffs.items():
            s = out.get(d)
            s = c if s is None else s + c
            if s:
                out[d] = s
            else:
                out.pop(d, None)
        p = LaurentPoly.__new__(LaurentPoly)
        p.coeffs = out
        return p

    def __neg__(self) -> "LaurentPoly":
        p = LaurentPoly.__new__(LaurentPoly)
        p.coeffs = {d: -c for d, c in self.coeffs.items()}
        return p

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not self.coeffs or not other.coeffs:
            return LaurentPoly.zero()
        a, b = self.coeffs, other.coeffs
        if len(a) > len(b):
            a, b = b, a
        if len(a) == 1:
            (d0, c0), = a.items()
            p = LaurentPoly.__new__(LaurentPoly)
            p.coeffs = {d + d0: c * c0 for d, c in b.items()}
            return p
        out: Dict[int, GaussianRational] = {}
        for d1, c1 in a.items():
            for d2, c2 in b.items():
                d = d1 + d2
                s = out.get(d)
                s = c1 * c2 if s is None else s + c1 * c2
                out[d] = s
        p = LaurentPoly.__new__(LaurentPoly)
        p.coeffs = {d: c for d, c in out.items() if c}
        return p

    def scale(self, factor: GaussianRational) -> "LaurentPoly":
        if not factor:
            return LaurentPoly.zero()
        p = LaurentPoly.__new__(LaurentPoly)
        p.coeffs = {d: c * factor for d, c in self.coeffs.items()}
        return p

    def shift(self, degrees: int) -> "LaurentPoly":
        if not degrees:
            return self
        p = LaurentPoly.__new__(LaurentPoly)
        p.coeffs = {d + degrees: c for d, c in self.coeffs.items()}
        return p

    def evaluate(self, y: complex) -> complex:
        return sum((c.to_complex() * y ** d for d, c in self.coeffs.items()),
                   0.0 + 0.0j)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for d in sorted(self.coeffs):
            parts.append(f"{self.coeffs[d]}*y^{d}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"


_ONE_POLY = LaurentPoly.one()


def _dense(p: LaurentPoly) -> list:
    """Dense ascending coefficient list of an ordinary polynomial (min deg 0)."""
    top = p.max_degree()
    out = [GR_ZERO] * (top + 1)
    for d, c in p.coeffs.items():
        out[d] = c
    return out


def _from_dense(values) -> LaurentPoly:
    return LaurentPoly({d: c for d, c in enumerate(values) if c})


def _dense_divmod(num: list, den: list):
    """Euclidean division of dense GR coefficient lists (den non-empty, monic-izable)."""
    num = list(num)
    dn = len(den) - 1
    lead_inv = den[-1].inverse()
    quot = [GR_ZERO] * max(len(num) - dn, 0)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if not c:
            continue
        f = c * lead_inv
        quot[i - dn] = f
        for k in range(dn + 1):
            num[i - dn + k] = num[i - dn + k] - f * den[k]
    while num and not num[-1]:
        num.pop()
    return quot, num


def _poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Monic gcd of two ordinary polynomials over Q(i)."""
    da, db = _dense(a), _dense(b)
    while db:
        _, rem = _dense_divmod(da, db)
        da, db = db, rem
    lead = da[-1]
    if lead != GR_ONE:
        inv = lead.inverse()
        da = [c * inv for c in da]
    return _from_dense(da)


def _poly_exact_div(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    quot, rem = _dense_divmod(_dense(a), _dense(b))
    if rem:
        raise ArithmeticError("non-exact polynomial division")
    return _from_dense(quot)


class CoeffFunction:
    """num/den with num a Laurent polynomial and den an ordinary polynomial,
    gcd-reduced and normalised so den is monic with nonzero constant term."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly = _ONE_POLY):
        if den.is_zero:
            raise ZeroDivisionError("zero denominator")
        if num.is_zero:
            self.num = num
            self.den = _ONE_POLY
            return
        if not den.is_one:
            # fold monomial content of den into num, keep den an ordinary poly
            shift = den.min_degree()
            if shift:
                den = den.shift(-shift)
                num = num.shift(-shift)
            if den.is_monomial:
                num = num.scale(den.coeffs[0].inverse())
                den = _ONE_POLY
            else:
                vnum = num.min_degree()
                g = _poly_gcd(num.shift(-vnum), den)
                if not g.is_one:
                    num = _poly_exact_div(num.shift(-vnum), g).shift(vnum)
                    den = _poly_exact_div(den, g)
                if den.is_monomial:
                    num = num.scale(den.coeffs[den.min_degree()].inverse())
                    den = _ONE_POLY
                else:
                    lead = den.coeffs[den.max_degree()]
                    if lead != GR_ONE:
                        inv = lead.inverse()
                        num = num.scale(inv)
                        den = den.scale(inv)
        self.num = num
        self.den = den

    @classmethod
    def of(cls, value) -> "CoeffFunction":
        if isinstance(value, CoeffFunction):
            return value
        if isinstance(value, LaurentPoly):
            return cls(value)
        return cls(LaurentPoly.monomial(0, GaussianRational.of(value)))

    @classmethod
    def zero(cls) -> "CoeffFunction":
        return cls(LaurentPoly.zero())

    @classmethod
    def one(cls) -> "CoeffFunction":
        return cls(_ONE_POLY)

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_one(self) -> bool:
        return self.den.is_one and self.num.is_one

    def __eq__(self, other) -> bool:
        return (isinstance(other, CoeffFunction)
                and self.num == other.num and self.den == other.den)

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other: "CoeffFunction") -> "CoeffFunction":
        if self.den.is_one and other.den.is_one:
            return CoeffFunction(self.num + other.num)
        if self.den == other.den:
            return CoeffFunction(self.num + other.num, self.den)
        return CoeffFunction(self.num * other.den + other.num * self.den,
                             self.den * other.den)

    def __neg__(self) -> "CoeffFunction":
        out = CoeffFunction.__new__(CoeffFunction)
        out.num = -self.num
        out.den = self.den
        return out

    def __sub__(self, other: "CoeffFunction") -> "CoeffFunction":
        return self + (-other)

    def __mul__(self, other: "CoeffFunction") -> "CoeffFunction":
        if self.num.is_zero or other.num.is_zero:
            return CoeffFunction.zero()
        if self.den.is_one and other.den.is_one:
            return CoeffFunction(self.num * other.num)
        return CoeffFunction(self.num * other.num, self.den * other.den)

    def inverse(self) -> "CoeffFunction":
        if self.num.is_zero:
            raise ZeroDivisionError("inverse of the zero coefficient function")
        return CoeffFunction(self.den, self.num)

    def __truediv__(self, other: "CoeffFunction") -> "CoeffFunction":
        return self * other.inverse()

    def evaluate(self, y: complex) -> complex:
        return self.num.evaluate(y) / self.den.evaluate(y)

    def __str__(self) -> str:
        if self.den.is_one:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self) -> str:
        return f"CoeffFunction({self})"


CF_ZERO = CoeffFunction.zero()
CF_ONE = CoeffFunction.one()
