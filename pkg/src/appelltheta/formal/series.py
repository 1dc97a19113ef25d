"""Truncated Laurent series in q^{1/24} with CoeffFunction coefficients."""

from __future__ import annotations

import cmath
import math
from typing import Dict

from ..halfint import QExp
from ..qseries import ModularPoint
from .coeffs import CF_ONE, CoeffFunction, LaurentPoly
from .gaussian import GaussianRational


class FormalQSeries:
    """Map from exact exponents (denominator 24) to coefficient functions,
    known below an exclusive order cutoff."""

    __slots__ = ("terms", "order")

    def __init__(self, terms: Dict[QExp, CoeffFunction], order: QExp):
        self.order = QExp.of(order)
        self.terms = {QExp.of(e): c for e, c in terms.items()
                      if not c.is_zero and QExp.of(e) < self.order}

    @classmethod
    def zero(cls, order) -> "FormalQSeries":
        return cls({}, order)

    @classmethod
    def one(cls, order) -> "FormalQSeries":
        return cls({QExp(0): CF_ONE}, order)

    @classmethod
    def constant(cls, coeff, order) -> "FormalQSeries":
        return cls({QExp(0): CoeffFunction.of(coeff)}, order)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def valuation(self) -> QExp:
        """Smallest stored exponent; the order itself for an all-zero series."""
        if not self.terms:
            return self.order
        return min(self.terms)

    def __eq__(self, other) -> bool:
        return (isinstance(other, FormalQSeries)
                and self.order == other.order and self.terms == other.terms)

    def __add__(self, other: "FormalQSeries") -> "FormalQSeries":
        order = min(self.order, other.order)
        out = {e: c for e, c in self.terms.items() if e < order}
        for e, c in other.terms.items():
            if e >= order:
                continue
            s = out.get(e)
            s = c if s is None else s + c
            if s.is_zero:
                out.pop(e, None)
            else:
                out[e] = s
        result = FormalQSeries.__new__(FormalQSeries)
        result.terms = out
        result.order = order
        return result

    def __neg__(self) -> "FormalQSeries":
        result = FormalQSeries.__new__(FormalQSeries)
        result.terms = {e: -c for e, c in self.terms.items()}
        result.order = self.order
        return result

    def __sub__(self, other: "FormalQSeries") -> "FormalQSeries":
        return self + (-other)

    def __mul__(self, other: "FormalQSeries") -> "FormalQSeries":
        # unknown tails enter at o1+v2, o2+v1 and o1+o2 (valuations may be negative)
        order = min(self.order + other.valuation(),
                    other.order + self.valuation(),
                    self.order + other.order)
        out: Dict[QExp, CoeffFunction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                if e >= order:
                    continue
                p = c1 * c2
                s = out.get(e)
                s = p if s is None else s + p
                out[e] = s
        result = FormalQSeries.__new__(FormalQSeries)
        result.terms = {e: c for e, c in out.items() if not c.is_zero}
        result.order = order
        return result

    def scale(self, coeff=None, y_power: int = 0, q_shift=QExp(0)) -> "FormalQSeries":
        """Multiply by (coeff) * y^{y_power} * q^{q_shift} exactly."""
        q_shift = QExp.of(q_shift)
        cf = None
        if coeff is not None:
            cf = coeff if isinstance(coeff, CoeffFunction) else \
                CoeffFunction.of(GaussianRational.of(coeff))
            if cf.is_zero:
                return FormalQSeries.zero(self.order + q_shift)
        mono = None
        if y_power:
            mono = CoeffFunction(LaurentPoly.monomial(y_power))
        out = {}
        for e, c in self.terms.items():
            if cf is not None:
                c = c * cf
            if mono is not None:
                c = c * mono
            out[e + q_shift] = c
        result = FormalQSeries.__new__(FormalQSeries)
        result.terms = {e: c for e, c in out.items() if not c.is_zero}
        result.order = self.order + q_shift
        return result

    def truncate(self, order) -> "FormalQSeries":
        order = QExp.of(order)
        if order >= self.order:
            order = self.order
        result = FormalQSeries.__new__(FormalQSeries)
        result.terms = {e: c for e, c in self.terms.items() if e < order}
        result.order = order
        return result

    def invert(self) -> "FormalQSeries":
        """Multiplicative inverse via the geometric series around the leading
        term; requires a nonzero (as a rational function) leading coefficient."""
        if self.is_zero:
            raise ZeroDivisionError("cannot invert a series with no known terms")
        v = self.valuation()
        lead = self.terms[v]
        lead_inv = lead.inverse()
        # t = 1 + r with r of positive valuation, known below self.order - v
        t = self.scale(lead_inv, 0, -v)
        r = t - FormalQSeries.one(t.order)
        acc = FormalQSeries.one(t.order)
        power = acc
        if not r.is_zero:
            step = r.valuation().num24
            for _ in range(t.order.num24 // step + 1):
                power = power * (-r)
                if power.is_zero:
                    break
                acc = acc + power
        return acc.scale(lead_inv, 0, -v)

    def evaluate(self, tau: ModularPoint, z: complex) -> complex:
        """Substitute numeric tau, z (y = e^{pi i z}, q-powers from tau)."""
        y = cmath.exp(1j * math.pi * complex(z))
        t = tau.tau
        total = 0.0 + 0.0j
        for e, c in self.terms.items():
            total += c.evaluate(y) * cmath.exp(2j * math.pi * t * float(e))
        return total

    def dump_lines(self):
        """Canonical text form: exponent, numerator, denominator per term."""
        for e in sorted(self.terms):
            c = self.terms[e]
            yield f"{e}\t{c.num}\t{c.den}"

    def __str__(self) -> str:
        if not self.terms:
            return f"O(q^{self.order})"
        parts = [f"[{self.terms[e]}] q^{e}" for e in sorted(self.terms)]
        return " + ".join(parts) + f" + O(q^{self.order})"

    def __repr__(self) -> str:
        return f"FormalQSeries({self})"
