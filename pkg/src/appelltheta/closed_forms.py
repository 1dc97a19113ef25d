"""Theta-quotient closed forms: the right-hand sides of every registered
identity, the finite theta correction sums bridging the Appell combinations
and the quotients, and the two affine-superalgebra denominator identities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .halfint import HalfInt
from .qseries import (POLE_GUARD, ModularPoint, PoleProximityError,
                      SeriesTruncation, ThetaIndex, dedekind_eta,
                      half_unit_phase, modular_power, mumford_theta, theta_km)

_CHARS = {"00": (0, 0), "01": (0, 1), "10": (1, 0), "11": (1, 1)}


def theta_ab(label: str, tau: ModularPoint, z: complex,
             trunc: SeriesTruncation = SeriesTruncation()) -> complex:
    a, b = _CHARS[label]
    return mumford_theta(a, b, tau, z, trunc)


def _guarded(value: complex, what: str, delta: float) -> complex:
    if abs(value) < delta:
        raise PoleProximityError(f"{what} within {delta} of zero")
    return value


@dataclass(frozen=True)
class CorrectionSum:
    """Finite theta sum with exponent pattern -1/4 (k-2a)^2 over k = 0..4a
    ("quarter") or -1/2 (k-a+1/2)^2 over k = 0..2a-1 ("half")."""

    a: HalfInt
    b: HalfInt
    kind: str

    def __post_init__(self):
        object.__setattr__(self, "a", HalfInt.of(self.a))
        object.__setattr__(self, "b", HalfInt.of(self.b))
        if self.kind not in ("quarter", "half"):
            raise ValueError("kind must be 'quarter' or 'half'")
        if self.a.twice < 0:
            raise ValueError("correction sum needs a >= 0")


def correction_sum(cs: CorrectionSum, tau: ModularPoint, z: complex,
                   trunc: SeriesTruncation = SeriesTruncation()) -> complex:
    """The finite sum including its prefactor (q^{a^2}, respectively
    -i e^{pi i b} q^{a^2/2})."""
    a, b = cs.a, cs.b
    if cs.kind == "quarter":
        two_a = a.twice  # upper limit 4a = 2 * two_a
        alt = b.is_half_odd
        total = 0.0j
        for k in range(2 * two_a + 1):
            expo = -Fraction((k - two_a) ** 2, 4)
            term = modular_power(tau, expo) * theta_km(
                ThetaIndex(HalfInt.of(k), HalfInt.of(1)), tau, 2 * z, trunc)
            total += -term if (alt and k % 2) else term
        return modular_power(tau, a.square()) * total
    # half kind: -i e^{pi i b} q^{a^2/2} sum_k (-1)^{(2b+1)k} q^{-(k-a+1/2)^2/2} theta11
    alt = b.is_integer  # (-1)^{(2b+1)k} alternates iff 2b+1 is odd
    upper = a.twice - 1  # 2a - 1
    total = 0.0j
    for k in range(upper + 1):
        expo = -Fraction((2 * k - a.twice + 1) ** 2, 8)  # -(k-a+1/2)^2/2
        term = modular_power(tau, expo)
        total += -term if (alt and k % 2) else term
    pref = -1j * half_unit_phase(b) * modular_power(tau, a.square() / 2)
    return pref * total * mumford_theta(1, 1, tau, complex(z), trunc)


def eta_cubed_theta11_2z(tau: ModularPoint, z: complex,
                         trunc: SeriesTruncation) -> complex:
    return dedekind_eta(tau, trunc) ** 3 * mumford_theta(1, 1, tau, 2 * complex(z), trunc)


def sl21_denominator_rhs(tau: ModularPoint, z: complex, a: HalfInt, b: HalfInt,
                         trunc: SeriesTruncation = SeriesTruncation(),
                         delta: float = POLE_GUARD) -> complex:
    """-i eta^3 theta11(2z) / (theta11(z + a*tau + b) theta11(z - a*tau - b))."""
    a, b = HalfInt.of(a), HalfInt.of(b)
    shift = float(a) * tau.tau + float(b)
    d1 = _guarded(mumford_theta(1, 1, tau, z + shift, trunc), "theta11 factor", delta)
    d2 = _guarded(mumford_theta(1, 1, tau, z - shift, trunc), "theta11 factor", delta)
    return -1j * eta_cubed_theta11_2z(tau, z, trunc) / (d1 * d2)


def osp32_denominator_rhs(tau: ModularPoint, z: complex, a: HalfInt, b: HalfInt,
                          trunc: SeriesTruncation = SeriesTruncation(),
                          delta: float = POLE_GUARD) -> complex:
    """i eta^3 theta11(2z) theta11(a*tau + b)
    / (theta11(z + a*tau + b) theta11(z - a*tau - b) theta11(z))."""
    a, b = HalfInt.of(a), HalfInt.of(b)
    shift = float(a) * tau.tau + float(b)
    d1 = _guarded(mumford_theta(1, 1, tau, z + shift, trunc), "theta11 factor", delta)
    d2 = _guarded(mumford_theta(1, 1, tau, z - shift, trunc), "theta11 factor", delta)
    d3 = _guarded(mumford_theta(1, 1, tau, complex(z), trunc), "theta11 factor", delta)
    num = eta_cubed_theta11_2z(tau, z, trunc) * mumford_theta(1, 1, tau, shift, trunc)
    return 1j * num / (d1 * d2 * d3)


def phi1_line_rhs(a: HalfInt, b: HalfInt, tau: ModularPoint, z: complex,
                  trunc: SeriesTruncation = SeriesTruncation(),
                  delta: float = POLE_GUARD) -> complex:
    """Quotient plus quarter-kind correction for Phi_1^{[1,0]} on the line."""
    quot = sl21_denominator_rhs(tau, z, a, b, trunc, delta)
    corr = correction_sum(CorrectionSum(a, b, "quarter"), tau, z, trunc)
    return 0.5 * quot + 0.5 * corr


def phi1_half_line_rhs(a: HalfInt, b: HalfInt, tau: ModularPoint, z: complex,
                       trunc: SeriesTruncation = SeriesTruncation(),
                       delta: float = POLE_GUARD) -> complex:
    """Quotient plus half-kind correction for Phi_1^{(-)[1/2,1/2]} on the line
    (a half-odd)."""
    quot = osp32_denominator_rhs(tau, z, a, b, trunc, delta)
    corr = correction_sum(CorrectionSum(a, b, "half"), tau, z, trunc)
    return 0.5 * quot + 0.5 * corr


@dataclass(frozen=True)
class QuotientForm:
    """RHS shape  scale * q^E * { qc * N * th_a th_b / th_c  +  correction }."""

    qc: complex
    null: str
    num1: str
    num2: str
    den: str


# Closed forms of the twelve named functions: 1/2 { qc * N * A B / C + cc * q^ce * D }.
FGH_RHS = {
    "f1": (QuotientForm(-1j, "00", "01", "10", "11"), 1.0 + 0j, Fraction(0), "00"),
    "f2": (QuotientForm(+1.0, "00", "01", "10", "00"), -1j, Fraction(0), "11"),
    "f3": (QuotientForm(+1j, "00", "00", "11", "10"), 1.0 + 0j, Fraction(0), "01"),
    "f4": (QuotientForm(-1j, "00", "00", "11", "01"), 1.0 + 0j, Fraction(0), "10"),
    "g1": (QuotientForm(-1j, "10", "01", "00", "11"), 2.0 + 0j, Fraction(-1, 8), "10"),
    "g2": (QuotientForm(-1.0, "10", "01", "00", "10"), 2j, Fraction(-1, 8), "11"),
    "g3": (QuotientForm(-1j, "10", "10", "11", "01"), 2.0 + 0j, Fraction(-1, 8), "00"),
    "g4": (QuotientForm(+1j, "10", "11", "10", "00"), 2.0 + 0j, Fraction(-1, 8), "01"),
    "h1": (QuotientForm(-1j, "01", "10", "00", "11"), 1.0 + 0j, Fraction(0), "01"),
    "h2": (QuotientForm(+1.0, "01", "00", "10", "01"), -1j, Fraction(0), "11"),
    "h3": (QuotientForm(+1j, "01", "11", "01", "10"), 1.0 + 0j, Fraction(0), "00"),
    "h4": (QuotientForm(-1j, "01", "01", "11", "00"), 1.0 + 0j, Fraction(0), "10"),
}


def _quotient(form: QuotientForm, tau, z, trunc, delta) -> complex:
    n00 = theta_ab(form.null, tau, 0.0, trunc)
    num = theta_ab(form.num1, tau, z, trunc) * theta_ab(form.num2, tau, z, trunc)
    den = _guarded(theta_ab(form.den, tau, z, trunc), f"theta{form.den} factor", delta)
    return form.qc * n00 * num / den


def fgh_rhs(name: str, tau: ModularPoint, z: complex,
            trunc: SeriesTruncation = SeriesTruncation(),
            delta: float = POLE_GUARD) -> complex:
    form, cc, ce, corr = FGH_RHS[name]
    value = _quotient(form, tau, z, trunc, delta)
    value += cc * modular_power(tau, ce) * theta_ab(corr, tau, z, trunc)
    return 0.5 * value


# n-shifted closed forms.  Fields: scale, half_center (True for the families
# whose prefactor is q^{(n+1/2)^2/2} and whose sum runs to 2n+1), quotient,
# (-1)^n on the quotient, correction coefficient, (-1)^k inside the sum,
# correction theta.
SHIFTED_RHS = {
    "f1_shifted": (1.0, False, QuotientForm(-1j, "00", "01", "10", "11"), False, 1.0 + 0j, False, "00"),
    "g1_shifted": (1.0, True, QuotientForm(-1j, "10", "01", "00", "11"), False, 1.0 + 0j, False, "10"),
    "g3_shifted": (1.0, True, QuotientForm(-1j, "10", "10", "11", "01"), False, 1.0 + 0j, False, "00"),
    "f4_shifted": (1.0, False, QuotientForm(-1j, "00", "00", "11", "01"), False, 1.0 + 0j, False, "10"),
    "f3_shifted": (1.0, False, QuotientForm(+1j, "00", "00", "11", "10"), False, 1.0 + 0j, False, "01"),
    "g2_shifted": (1.0, True, QuotientForm(-1.0, "10", "01", "00", "10"), False, 1j, False, "11"),
    "g4_shifted": (1.0, True, QuotientForm(+1j, "10", "11", "10", "00"), False, 1.0 + 0j, False, "01"),
    "f2_shifted": (1.0, False, QuotientForm(+1.0, "00", "01", "10", "00"), False, -1j, False, "11"),
    "h2_shifted": (0.5, False, QuotientForm(+1.0, "01", "00", "10", "01"), True, -1j, True, "11"),
    "h4_shifted": (0.5, False, QuotientForm(-1j, "01", "01", "11", "00"), True, 1.0 + 0j, True, "10"),
    "h1_shifted": (0.5, False, QuotientForm(-1j, "01", "10", "00", "11"), True, 1.0 + 0j, True, "01"),
    "h3_shifted": (0.5, False, QuotientForm(+1j, "01", "11", "01", "10"), True, 1.0 + 0j, True, "00"),
}


def shifted_rhs(family: str, n: int, tau: ModularPoint, z: complex,
                trunc: SeriesTruncation = SeriesTruncation(),
                delta: float = POLE_GUARD) -> complex:
    scale, half_center, form, quot_alt, cc, corr_alt, corr = SHIFTED_RHS[family]
    if n < 0:
        raise ValueError("shift parameter n must be >= 0")
    quot = _quotient(form, tau, z, trunc, delta)
    if quot_alt and n % 2:
        quot = -quot
    center = Fraction(2 * n + 1, 2) if half_center else Fraction(n)
    upper = 2 * n + 1 if half_center else 2 * n
    weight = 0.0j
    for k in range(upper + 1):
        w = modular_power(tau, -Fraction(1, 2) * (k - center) ** 2)
        weight += -w if (corr_alt and k % 2) else w
    corr_value = cc * weight * theta_ab(corr, tau, z, trunc)
    pref = modular_power(tau, Fraction(1, 2) * center ** 2)
    return scale * pref * (quot + corr_value)


# Collapsed-quotient forms of Phi_1^{[1,0]} at integer / half-odd tau-shift:
# 1/2 q^E { qc eta^3 theta11(2z) / theta_xx(z)^2 + sum_k (+-1)^k q^{-(k-c)^2/4} theta_{k,1}(2z) }.
PHI1_SHIFT_RHS = {
    "phi1_shift_11": (-1j, "11", False, False),
    "phi1_shift_10": (+1j, "10", True, False),
    "phi1_shift_01": (-1j, "01", False, True),
    "phi1_shift_00": (+1j, "00", True, True),
}


def phi1_shift_rhs(which: str, n: int, tau: ModularPoint, z: complex,
                   trunc: SeriesTruncation = SeriesTruncation(),
                   delta: float = POLE_GUARD) -> complex:
    qc, den_label, alt, half_center = PHI1_SHIFT_RHS[which]
    if n < 0:
        raise ValueError("shift parameter n must be >= 0")
    den = _guarded(theta_ab(den_label, tau, z, trunc),
                   f"theta{den_label} factor", delta)
    quot = qc * eta_cubed_theta11_2z(tau, z, trunc) / den ** 2
    center = 2 * n + 1 if half_center else 2 * n
    upper = 4 * n + 2 if half_center else 4 * n
    total = 0.0j
    for k in range(upper + 1):
        term = modular_power(tau, -Fraction((k - center) ** 2, 4)) * theta_km(
            ThetaIndex(HalfInt.of(k), HalfInt.of(1)), tau, 2 * z, trunc)
        total += -term if (alt and k % 2) else term
    pref_exp = Fraction((2 * n + 1) ** 2, 4) if half_center else Fraction(n * n)
    return 0.5 * modular_power(tau, pref_exp) * (quot + total)
