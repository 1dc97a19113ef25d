"""Exact expansions of every registered identity: one (lhs, rhs) series pair
builder per family, sharing the shape tables of the numeric evaluators, plus
the residual prover."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from ..appell import FGH_SERIES, LatticeSum, shifted_spec
from ..closed_forms import FGH_RHS, PHI1_SHIFT_RHS, SHIFTED_RHS, QuotientForm
from ..halfint import HalfInt, QExp
from .expand import (appell_lattice, eta_half_squared, eta_series,
                     mumford_series, scalar_weight_series, theta_km_series)
from .gaussian import GR_I, GR_ONE, GaussianRational, i_power
from .series import FormalQSeries

_CHARS = {"00": (0, 0), "01": (0, 1), "10": (1, 0), "11": (1, 1)}
_HALF = GaussianRational.of(Fraction(1, 2))
_ZERO_H = HalfInt(0)

#: Extra q-orders carried internally so that valuation losses in quotients and
#: down-shifted correction weights never eat into the requested order.
PAD = QExp.of(4)


def _internal(order) -> QExp:
    return QExp.of(order) + PAD


def _theta(label: str, order: QExp, z_mult: int = 1,
           tau_shift: HalfInt = _ZERO_H, unit_shift: HalfInt = _ZERO_H,
           level: int = 1) -> FormalQSeries:
    a, b = _CHARS[label]
    return mumford_series(a, b, order, level=level, z_mult=z_mult,
                          tau_shift=tau_shift, unit_shift=unit_shift)


@lru_cache(maxsize=None)
def _inv_theta(label: str, order: QExp, tau_shift: HalfInt = _ZERO_H,
               unit_shift: HalfInt = _ZERO_H) -> FormalQSeries:
    return _theta(label, order, 1, tau_shift, unit_shift).invert()


@lru_cache(maxsize=None)
def _inv_eta(level: int, order: QExp) -> FormalQSeries:
    return eta_series(level, order).invert()


@lru_cache(maxsize=None)
def _eta_cubed_theta11_2z(order: QExp) -> FormalQSeries:
    e1 = eta_series(1, order)
    return e1 * e1 * e1 * _theta("11", order, z_mult=2)


def lattice_formal(spec: LatticeSum, order: QExp) -> FormalQSeries:
    """Expansion of a LatticeSum (numerator y^{2(w j + p)})."""
    s = appell_lattice(spec.eps, 2 * spec.w, int(2 * spec.p),
                       spec.A, spec.B, spec.C, spec.sigma, 2,
                       Fraction(1), spec.shift, order)
    if spec.scale != 1.0:
        s = s.scale(GaussianRational.of(spec.scale))
    return s


def _quotient_series(form: QuotientForm, order: QExp) -> FormalQSeries:
    nul = _theta(form.null, order, z_mult=0)
    num = _theta(form.num1, order) * _theta(form.num2, order)
    out = nul * num * _inv_theta(form.den, order)
    return out.scale(GaussianRational.of(form.qc))


def fgh_pair(name: str, order: QExp):
    o = _internal(order)
    lhs = lattice_formal(FGH_SERIES[name], o)
    form, cc, ce, corr = FGH_RHS[name]
    rhs = _quotient_series(form, o) + _theta(corr, o).scale(
        GaussianRational.of(cc), 0, QExp.of(ce))
    return lhs, rhs.scale(_HALF)


def shifted_pair(family: str, n: int, order: QExp):
    o = _internal(order)
    lhs = lattice_formal(shifted_spec(family[:-8], n), o)
    scale, half_center, form, quot_alt, cc, corr_alt, corr = SHIFTED_RHS[family]
    center = Fraction(2 * n + 1, 2) if half_center else Fraction(n)
    upper = 2 * n + 1 if half_center else 2 * n
    weight = scalar_weight_series(
        [(-Fraction(1, 2) * (k - center) ** 2, not (corr_alt and k % 2))
         for k in range(upper + 1)], o)
    quot = _quotient_series(form, o)
    if quot_alt and n % 2:
        quot = -quot
    rhs = quot + (weight * _theta(corr, o)).scale(GaussianRational.of(cc))
    rhs = rhs.scale(GaussianRational.of(scale), 0,
                    QExp.of(Fraction(1, 2) * center ** 2))
    return lhs, rhs


def phi1_line_lhs(a: HalfInt, b: HalfInt, order: QExp) -> FormalQSeries:
    """One-variable form of Phi_1^{[1,0]} on the line."""
    sigma = -1 if b.is_half_odd else 1
    return appell_lattice(1, 4, 0, Fraction(1), Fraction(0), Fraction(0),
                          sigma, 2, Fraction(1), a.as_fraction(), order)


def _phi2_line_lhs(a: HalfInt, b: HalfInt, order: QExp) -> FormalQSeries:
    """Phi_2^{[1,0]} on the line (mirror kernel in y^{-1})."""
    sigma = -1 if b.is_half_odd else 1
    return appell_lattice(1, -4, 0, Fraction(1), Fraction(0), Fraction(0),
                          sigma, -2, Fraction(1), a.as_fraction(), order)


def _sl21_quotient(a: HalfInt, b: HalfInt, order: QExp) -> FormalQSeries:
    core = _eta_cubed_theta11_2z(order) * _inv_theta("11", order, a, b) \
        * _inv_theta("11", order, -a, -b)
    return core.scale(-GR_I)


def _quarter_correction(a: HalfInt, b: HalfInt, order: QExp) -> FormalQSeries:
    two_a = a.twice
    total = FormalQSeries.zero(order)
    for k in range(2 * two_a + 1):
        piece = theta_km_series(HalfInt.of(k), HalfInt.of(1), 2, order).scale(
            None, 0, QExp.of(-Fraction((k - two_a) ** 2, 4)))
        if b.is_half_odd and k % 2:
            piece = -piece
        total = total + piece
    return total.scale(None, 0, QExp.of(a.square()))


def phi1_line_pair(a: HalfInt, b: HalfInt, order: QExp):
    o = _internal(order)
    lhs = phi1_line_lhs(a, b, o)
    rhs = (_sl21_quotient(a, b, o) + _quarter_correction(a, b, o)).scale(_HALF)
    return lhs, rhs


def sl21_pair(a: HalfInt, b: HalfInt, order: QExp):
    o = _internal(order)
    lhs = phi1_line_lhs(a, b, o) - _phi2_line_lhs(a, b, o)
    return lhs, _sl21_quotient(a, b, o)


def _phi1_half_lhs(a: HalfInt, b: HalfInt, order: QExp) -> FormalQSeries:
    """Phi_1^{(-)[1/2,1/2]} on the line: prefactor e^{pi i b} q^{a/2} y."""
    sigma = -1 if b.is_half_odd else 1
    core = appell_lattice(-1, 2, 0, Fraction(1, 2), Fraction(1, 2), Fraction(0),
                          sigma, 2, Fraction(1), a.as_fraction(), order)
    return core.scale(i_power(b.twice), 1, QExp.of(a.as_fraction() / 2))


def _phi2_half_lhs(a: HalfInt, b: HalfInt, order: QExp) -> FormalQSeries:
    sigma = -1 if b.is_half_odd else 1
    core = appell_lattice(-1, -2, 0, Fraction(1, 2), Fraction(1, 2), Fraction(0),
                          sigma, -2, Fraction(1), a.as_fraction(), order)
    return core.scale(i_power(b.twice), -1, QExp.of(a.as_fraction() / 2))


def _half_correction(a: HalfInt, b: HalfInt, order: QExp) -> FormalQSeries:
    alt = b.is_integer
    weight = scalar_weight_series(
        [(-Fraction((2 * k - a.twice + 1) ** 2, 8), not (alt and k % 2))
         for k in range(a.twice)], order)
    pref = -GR_I * i_power(b.twice)
    return (weight * _theta("11", order)).scale(pref, 0, QExp.of(a.square() / 2))


def _osp32_quotient(a: HalfInt, b: HalfInt, order: QExp) -> FormalQSeries:
    core = _eta_cubed_theta11_2z(order) \
        * _theta("11", order, z_mult=0, tau_shift=a, unit_shift=b) \
        * _inv_theta("11", order, a, b) * _inv_theta("11", order, -a, -b) \
        * _inv_theta("11", order)
    return core.scale(GR_I)


def half_combo_pair(a: HalfInt, b: HalfInt, order: QExp):
    o = _internal(order)
    lhs = _phi1_half_lhs(a, b, o)
    phi2 = _phi2_half_lhs(a, b, o)
    lhs = (lhs + phi2) if a.is_integer else (lhs - phi2)
    return lhs, _half_correction(a, b, o)


def osp32_pair(a: HalfInt, b: HalfInt, order: QExp):
    o = _internal(order)
    lhs = _phi1_half_lhs(a, b, o) + _phi2_half_lhs(a, b, o)
    return lhs, _osp32_quotient(a, b, o)


def phi1_half_line_pair(a: HalfInt, b: HalfInt, order: QExp):
    o = _internal(order)
    lhs = _phi1_half_lhs(a, b, o)
    rhs = (_osp32_quotient(a, b, o) + _half_correction(a, b, o)).scale(_HALF)
    return lhs, rhs


def phi1_shift_pair(which: str, n: int, order: QExp):
    o = _internal(order)
    qc, den_label, alt, half_center = PHI1_SHIFT_RHS[which]
    a = HalfInt(2 * n + (1 if half_center else 0))
    b = HalfInt(1 if which in ("phi1_shift_10", "phi1_shift_00") else 0)
    lhs = phi1_line_lhs(a, b, o)
    inv = _inv_theta(den_label, o)
    quot = (_eta_cubed_theta11_2z(o) * inv * inv).scale(GaussianRational.of(qc))
    center = 2 * n + 1 if half_center else 2 * n
    total = FormalQSeries.zero(o)
    for k in range((4 * n + 2 if half_center else 4 * n) + 1):
        piece = theta_km_series(HalfInt.of(k), HalfInt.of(1), 2, o).scale(
            None, 0, QExp.of(-Fraction((k - center) ** 2, 4)))
        if alt and k % 2:
            piece = -piece
        total = total + piece
    pref_exp = QExp.of(Fraction((2 * n + 1) ** 2, 4) if half_center
                       else Fraction(n * n))
    rhs = (quot + total).scale(_HALF, 0, pref_exp)
    return lhs, rhs


def doubling_pair(variant: str, a: HalfInt, order: QExp):
    o = _internal(order)
    lhs0 = phi1_line_lhs(a, HalfInt(0), o)
    lhs1 = phi1_line_lhs(a, HalfInt(1), o)
    two_a = a.as_fraction() * 2
    if variant == "+":
        lhs = lhs0 + lhs1
        rhs = appell_lattice(1, 4, 0, Fraction(1), Fraction(0), Fraction(0),
                             1, 4, Fraction(2), two_a, o)
    else:
        lhs = lhs0 - lhs1
        rhs = appell_lattice(1, 4, 0, Fraction(1), Fraction(1), Fraction(0),
                             1, 4, Fraction(2), two_a, o)
        rhs = rhs.scale(None, 2, QExp.of(a.as_fraction()))
    return lhs, rhs.scale(GaussianRational.of(2))


@lru_cache(maxsize=None)
def _dup_factor_a(order: QExp) -> FormalQSeries:
    e2 = eta_series(2, order)
    core = e2 * e2 * e2 * e2 * e2
    inv1 = _inv_eta(1, order)
    inv4 = _inv_eta(4, order)
    return (core * inv1 * inv1 * inv4 * inv4).scale(GaussianRational.of(2))


@lru_cache(maxsize=None)
def _dup_factor_b(order: QExp) -> FormalQSeries:
    e4 = eta_series(4, order)
    return (e4 * e4 * _inv_eta(2, order)).scale(GaussianRational.of(4))


def duplication_pair(variant: int, order: QExp):
    o = _internal(order)
    t00 = _theta("00", o)
    t01 = _theta("01", o)
    t10 = _theta("10", o)
    t11 = _theta("11", o)
    if variant == 1:
        lhs = t00 * t00 + t01 * t01
        rhs = _dup_factor_a(o) * _theta("00", o, level=2, z_mult=2)
    elif variant == 2:
        lhs = t00 * t00 - t01 * t01
        rhs = _dup_factor_b(o) * _theta("10", o, level=2, z_mult=2)
    elif variant == 3:
        lhs = t10 * t10 + t11 * t11
        rhs = _dup_factor_b(o) * _theta("00", o, level=2, z_mult=2)
    elif variant == 4:
        lhs = t10 * t10 - t11 * t11
        rhs = _dup_factor_a(o) * _theta("10", o, level=2, z_mult=2)
    else:
        raise ValueError("duplication variant must be 1..4")
    return lhs, rhs


def nullwert_pair(label: str, order: QExp):
    o = _internal(order)
    lhs = _theta(label, o, z_mult=0)
    e1 = eta_series(1, o)
    if label == "00":
        inv2 = _inv_eta(2, o)
        rhs = e1 * e1 * e1 * e1 * e1 * eta_half_squared(o).invert() * inv2 * inv2
    elif label == "01":
        rhs = eta_half_squared(o) * _inv_eta(1, o)
    elif label == "10":
        e2 = eta_series(2, o)
        rhs = (e2 * e2 * _inv_eta(1, o)).scale(GaussianRational.of(2))
    else:
        raise ValueError("nullwert label must be 00, 01 or 10")
    return lhs, rhs
