"""Exact q-expansions of the basic series: eta products (Euler pentagonal
form), Mumford thetas with rationally shifted arguments, degree-m thetas, and
the Appell-type one-variable lattice sums."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Dict

from ..halfint import HalfInt, QExp
from .coeffs import CF_ONE, CoeffFunction, LaurentPoly
from .gaussian import GR_ONE, GaussianRational, i_power
from .series import FormalQSeries

_MINUS_ONE = -GR_ONE


def _add_term(terms: Dict[QExp, CoeffFunction], e: QExp, coeff: CoeffFunction):
    s = terms.get(e)
    s = coeff if s is None else s + coeff
    if s.is_zero:
        terms.pop(e, None)
    else:
        terms[e] = s


def _const(value: GaussianRational) -> CoeffFunction:
    return CoeffFunction(LaurentPoly.monomial(0, value))


def _monomial(value: GaussianRational, y_power: int) -> CoeffFunction:
    return CoeffFunction(LaurentPoly.monomial(y_power, value))


@lru_cache(maxsize=None)
def eta_series(level: int, order: QExp) -> FormalQSeries:
    """eta(level*tau) = q^{level/24} sum_k (-1)^k q^{level(3k^2-k)/2}."""
    if level < 1:
        raise ValueError("eta level must be a positive integer")
    order = QExp.of(order)
    shift = QExp.of(Fraction(level, 24))
    terms: Dict[QExp, CoeffFunction] = {}
    k = 0
    while True:
        hit = False
        for kk in ((k,) if k == 0 else (k, -k)):
            e = QExp.of(Fraction(level * (3 * kk * kk - kk), 2)) + shift
            if e < order:
                hit = True
                _add_term(terms, e, _const(GR_ONE if kk % 2 == 0 else _MINUS_ONE))
        if not hit and k > 0:
            break
        k += 1
    return FormalQSeries(terms, order)


@lru_cache(maxsize=None)
def eta_half_squared(order: QExp) -> FormalQSeries:
    """eta(tau/2)^2; the square keeps the exponents on the 1/24 lattice."""
    order = QExp.of(order)
    # pentagonal series of eta(tau/2) without its q^{1/48} prefactor
    terms: Dict[QExp, CoeffFunction] = {}
    k = 0
    while True:
        hit = False
        for kk in ((k,) if k == 0 else (k, -k)):
            e = QExp.of(Fraction(3 * kk * kk - kk, 4))
            if e < order:
                hit = True
                _add_term(terms, e, _const(GR_ONE if kk % 2 == 0 else _MINUS_ONE))
        if not hit and k > 0:
            break
        k += 1
    bare = FormalQSeries(terms, order)
    return (bare * bare).scale(None, 0, QExp.of(Fraction(1, 24)))


@lru_cache(maxsize=None)
def mumford_series(a: int, b: int, order: QExp, level: int = 1,
                   z_mult: int = 1, tau_shift: HalfInt = HalfInt(0),
                   unit_shift: HalfInt = HalfInt(0)) -> FormalQSeries:
    """Expansion of theta_ab(level*tau, z_mult*z + tau_shift*tau + unit_shift):

    terms q^{level (2n+a)^2 / 8 + (2n+a) tau_shift / 2} y^{z_mult (2n+a)}
    with Gaussian-rational phases i^{(2n+a)(2 unit_shift + b)}.
    """
    if a not in (0, 1) or b not in (0, 1):
        raise ValueError("theta characteristics must be bits")
    order = QExp.of(order)
    ocut = order.as_fraction()
    c = HalfInt.of(tau_shift).as_fraction()
    m_phase = HalfInt.of(unit_shift).twice + b  # 2d + b, an integer
    terms: Dict[QExp, CoeffFunction] = {}

    def exponent(n: int) -> Fraction:
        h = Fraction(2 * n + a)
        return Fraction(level) * h * h / 8 + h * c / 2

    # expand outward from the vertex of the exponent
    vertex = (-2 * c / level - a) / 2
    n0 = int(round(vertex))
    for direction in (1, -1):
        n = n0 if direction == 1 else n0 - 1
        while True:
            e = exponent(n)
            if e >= ocut and (n - vertex) * direction > 0:
                break
            if e < ocut:
                h = 2 * n + a
                phase = i_power(h * m_phase)
                _add_term(terms, QExp.of(e), _monomial(phase, z_mult * h))
            n += direction
    return FormalQSeries(terms, order)


@lru_cache(maxsize=None)
def theta_km_series(k: HalfInt, m: HalfInt, z_mult: int, order: QExp,
                    signed: bool = False) -> FormalQSeries:
    """Expansion of theta^{(-)?}_{k,m}(tau, z_mult*z):
    sum over n = j + k/(2m) of (+-1)^j q^{m n^2} y^{2 m n z_mult}."""
    k = HalfInt.of(k)
    m = HalfInt.of(m)
    if m.twice <= 0:
        raise ValueError("theta degree m must be positive")
    if (k.twice * z_mult) % 2:
        raise ValueError("z multiplier incompatible with half-odd characteristic")
    order = QExp.of(order)
    ocut = order.as_fraction()
    off = Fraction(k.twice, 2 * m.twice)
    mf = m.as_fraction()
    terms: Dict[QExp, CoeffFunction] = {}

    def exponent(j: int) -> Fraction:
        n = j + off
        return mf * n * n

    vertex = -off
    j0 = int(round(vertex))
    for direction in (1, -1):
        j = j0 if direction == 1 else j0 - 1
        while True:
            e = exponent(j)
            if e >= ocut and (j - vertex) * direction > 0:
                break
            if e < ocut:
                n = j + off
                ypow = 2 * mf * n * z_mult
                assert ypow.denominator == 1
                sign = _MINUS_ONE if (signed and j % 2) else GR_ONE
                _add_term(terms, QExp.of(e), _monomial(sign, int(ypow)))
            j += direction
    return FormalQSeries(terms, order)


def appell_lattice(eps: int, ny_slope: int, ny_off: int,
                   A: Fraction, B: Fraction, C: Fraction,
                   sigma: int, dy: int, dD: Fraction, dE: Fraction,
                   order: QExp) -> FormalQSeries:
    """Expansion of  sum_j eps^j y^{ny_slope j + ny_off} q^{A j^2 + B j + C}
                      / (1 - sigma y^{dy} q^{dD j + dE}).

    Denominators of positive q-valuation expand geometrically, a valuation-0
    denominator becomes the coefficient function 1/(1 - sigma y^{dy}), and a
    negative-valuation denominator is rewritten as -u^{-1}/(1 - u^{-1})."""
    order = QExp.of(order)
    A, B, C = Fraction(A), Fraction(B), Fraction(C)
    dD, dE = Fraction(dD), Fraction(dE)
    ocut = order.as_fraction()

    def valuation(j: int) -> Fraction:
        v = A * j * j + B * j + C
        e = dD * j + dE
        return v - e if e < 0 else v

    # window of contributing j from the two valuation quadratics
    bounds = []
    for (qa, qb, qc) in ((A, B, C), (A, B - dD, C - dE)):
        disc = qb * qb - 4 * qa * (qc - ocut)
        if disc >= 0:
            root = float(disc) ** 0.5
            bounds.append(int((float(-qb) - root) / float(2 * qa)) - 2)
            bounds.append(int((float(-qb) + root) / float(2 * qa)) + 2)
    terms: Dict[QExp, CoeffFunction] = {}
    if not bounds:
        return FormalQSeries(terms, order)
    for j in range(min(bounds), max(bounds) + 1):
        if valuation(j) >= ocut:
            continue
        base = A * j * j + B * j + C
        ypow = ny_slope * j + ny_off
        sign = _MINUS_ONE if (eps < 0 and j % 2) else GR_ONE
        e_den = dD * j + dE
        if e_den > 0:
            ell = 0
            while base + ell * e_den < ocut:
                coeff = sign if (sigma > 0 or ell % 2 == 0) else -sign
                _add_term(terms, QExp.of(base + ell * e_den),
                          _monomial(coeff, ypow + ell * dy))
                ell += 1
        elif e_den == 0:
            den = LaurentPoly({0: GR_ONE, dy: _MINUS_ONE if sigma > 0 else GR_ONE})
            _add_term(terms, QExp.of(base),
                      CoeffFunction(LaurentPoly.monomial(ypow, sign), den))
        else:
            ell = 1
            while base - ell * e_den < ocut:
                coeff = -sign if (sigma > 0 or ell % 2 == 0) else sign
                _add_term(terms, QExp.of(base - ell * e_den),
                          _monomial(coeff, ypow - ell * dy))
                ell += 1
    return FormalQSeries(terms, order)


def scalar_weight_series(exponents_and_signs, order: QExp) -> FormalQSeries:
    """Finite sum of +-q^e terms (the correction-sum weights)."""
    order = QExp.of(order)
    terms: Dict[QExp, CoeffFunction] = {}
    for e, positive in exponents_and_signs:
        ee = QExp.of(e)
        if ee < order:
            _add_term(terms, ee, _const(GR_ONE if positive else _MINUS_ONE))
    return FormalQSeries(terms, order)
