"""Numeric building blocks: nome powers, Dedekind eta, Mumford theta functions,
and degree-m theta series with signed variants.

Conventions are pinned by three internal consistency checks rather than by a
choice of reference text: theta11 vanishes at z = 0, theta10 at z = 0 equals
2*eta(2*tau)^2/eta(tau), and the signed half-index series at (1/2, 1/2) equals
-i*theta11.  Every fractional power of the nome is computed as exp(2*pi*i*tau*r)
for an exact rational r; no logarithm of q is ever taken.

All bilateral series are summed outward from their peak term and a value is
returned only once an explicit geometric tail bound drops below the requested
tolerance.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .halfint import HalfInt, QExp

TWO_PI = 2.0 * math.pi

#: Largest admissible magnitude ratio between consecutive tail bounds; the
#: geometric tail estimate bound/(1-ratio) is only trusted below this.
_RATIO_CAP = 0.9

#: Default guard distance for series denominators (multiplicative variable).
POLE_GUARD = 1e-6


class TruncationError(ArithmeticError):
    """max_terms exhausted before the tail bound met the tolerance."""


class PoleProximityError(ArithmeticError):
    """A series denominator came within the pole guard distance of zero."""

    def __init__(self, message: str, index=None):
        super().__init__(message)
        self.index = index


class DomainError(ValueError):
    """Parameters outside the validity domain of an identity or operation."""


@dataclass(frozen=True)
class ModularPoint:
    """A point tau in the open upper half-plane, the sole source of the nome."""

    tau: complex

    def __post_init__(self):
        t = complex(self.tau)
        if not t.imag > 0.0:
            raise ValueError(f"tau = {t} is not in the open upper half-plane")
        object.__setattr__(self, "tau", t)
        if not abs(cmath.exp(2j * math.pi * t)) < 1.0:  # defensive; follows from Im > 0
            raise ValueError(f"|q| >= 1 at tau = {t}")

    @property
    def q(self) -> complex:
        return cmath.exp(2j * math.pi * self.tau)

    @property
    def abs_q(self) -> float:
        return math.exp(-TWO_PI * self.tau.imag)

    @property
    def im(self) -> float:
        return self.tau.imag

    def scaled(self, factor) -> "ModularPoint":
        """The point factor*tau (factor a positive rational)."""
        fr = Fraction(factor)
        if fr <= 0:
            raise ValueError("scale factor must be positive")
        return ModularPoint(self.tau * fr.numerator / fr.denominator)

    def shifted(self, units: int) -> "ModularPoint":
        return ModularPoint(self.tau + units)


@dataclass(frozen=True)
class SeriesTruncation:
    """Tolerance / term-count budget shared by every series loop."""

    tolerance: float = 1e-12
    max_terms: int = 10**6

    def __post_init__(self):
        if not self.tolerance > 0.0:
            raise ValueError("tolerance must be positive")
        if not self.max_terms > 0:
            raise ValueError("max_terms must be positive")

    def tighter(self, factor: float) -> "SeriesTruncation":
        return SeriesTruncation(self.tolerance * factor, self.max_terms)


@dataclass(frozen=True)
class ThetaIndex:
    """Characteristic and degree (k, m) of a degree-m theta series.

    k is stored exactly and only reduced modulo 2m on explicit request.
    """

    k: HalfInt
    m: HalfInt

    def __post_init__(self):
        object.__setattr__(self, "k", HalfInt.of(self.k))
        object.__setattr__(self, "m", HalfInt.of(self.m))
        if self.m.twice <= 0:
            raise ValueError("theta degree m must be positive")

    def reduced(self) -> "ThetaIndex":
        """Index with k reduced into [0, 2m)."""
        period = 2 * self.m.twice
        return ThetaIndex(HalfInt(self.k.twice % period), self.m)

    @property
    def offset(self) -> Fraction:
        """Lattice offset k/(2m) of the summation variable."""
        return Fraction(self.k.twice, 2 * self.m.twice)


def _as_fraction(r) -> Fraction:
    if isinstance(r, (HalfInt, QExp)):
        return r.as_fraction()
    return Fraction(r)


def modular_power(tau: ModularPoint, r) -> complex:
    """q^r computed as exp(2*pi*i*tau*r) for exact rational r.

    This fixes the branch of every fractional power of the nome once and
    for all; it is multiplicative in r by construction.
    """
    fr = _as_fraction(r)
    return cmath.exp(2j * math.pi * tau.tau * (fr.numerator / fr.denominator))


def half_unit_phase(b: HalfInt) -> complex:
    """exp(pi*i*b) for b in (1/2)Z, exact on the fourth roots of unity."""
    return (1.0 + 0.0j, 1.0j, -1.0 + 0.0j, -1.0j)[HalfInt.of(b).twice % 4]


def sum_bilateral(term, log_bound, trunc: SeriesTruncation, *,
                  center: int = 0, hi_safe=None, lo_safe=None) -> complex:
    """Sum term(j) over all integers j with a rigorous geometric tail bound.

    log_bound(j) must bound log|term(j)| for j >= hi_safe and j <= lo_safe,
    and its increments must keep shrinking away from the center; the
    quadratic q-exponents of every series here guarantee that.  Summation
    never stops inside (lo_safe, hi_safe), which is where Appell-type
    denominators can approach zero.
    """
    if hi_safe is None:
        hi_safe = center
    if lo_safe is None:
        lo_safe = center
    half_tol = 0.5 * trunc.tolerance
    log_cap = math.log(_RATIO_CAP)

    def tail_ok(j: int, step: int) -> bool:
        if step > 0 and j + 1 < hi_safe:
            return False
        if step < 0 and j - 1 > lo_safe:
            return False
        b1 = log_bound(j + step)
        b2 = log_bound(j + 2 * step)
        if b2 - b1 > log_cap:
            return False
        ratio = math.exp(b2 - b1)
        return math.exp(min(b1, 700.0)) / (1.0 - ratio) < half_tol

    total = term(center)
    count = 1
    j = center
    while not tail_ok(j, +1):
        j += 1
        total += term(j)
        count += 1
        if count > trunc.max_terms:
            raise TruncationError(f"no tail bound below {trunc.tolerance} "
                                  f"within {trunc.max_terms} terms")
    j = center
    while not tail_ok(j, -1):
        j -= 1
        total += term(j)
        count += 1
        if count > trunc.max_terms:
            raise TruncationError(f"no tail bound below {trunc.tolerance} "
                                  f"within {trunc.max_terms} terms")
    return total


def mumford_theta(a: int, b: int, tau: ModularPoint, z: complex,
                  trunc: SeriesTruncation = SeriesTruncation()) -> complex:
    """Theta with characteristics a, b in {0, 1}:

        sum over n of exp(pi*i*(n+a/2)^2*tau + 2*pi*i*(n+a/2)*(z+b/2)).
    """
    if a not in (0, 1) or b not in (0, 1):
        raise ValueError("theta characteristics must be bits")
    t = tau.tau
    y_t = t.imag
    z = complex(z)
    y_z = z.imag
    zb = z + 0.5 * b
    ha = 0.5 * a

    def term(n: int) -> complex:
        h = n + ha
        return cmath.exp(1j * math.pi * (h * h * t + 2.0 * h * zb))

    def log_bound(n: int) -> float:
        h = n + ha
        return -math.pi * (h * h * y_t + 2.0 * h * y_z)

    center = int(round(-y_z / y_t - ha))
    return sum_bilateral(term, log_bound, trunc, center=center)


def theta_km(idx: ThetaIndex, tau: ModularPoint, u: complex,
             trunc: SeriesTruncation = SeriesTruncation(),
             signed: bool = False) -> complex:
    """Degree-m theta: sum over n in Z + k/(2m) of q^{m n^2} e^{2 pi i m n u}.

    With signed=True the term at n = j + k/(2m) carries the factor (-1)^j,
    normalised so the (1/2, 1/2) signed series at doubled argument equals
    -i*theta11.
    """
    t = tau.tau
    y_t = t.imag
    u = complex(u)
    y_u = u.imag
    mf = idx.m.twice / 2.0
    cf = float(idx.offset)

    def term(j: int) -> complex:
        n = j + cf
        value = cmath.exp(2j * math.pi * (t * (mf * n * n) + mf * n * u))
        if signed and j % 2:
            return -value
        return value

    def log_bound(j: int) -> float:
        n = j + cf
        return -TWO_PI * mf * (n * n * y_t + n * y_u)

    center = int(round(-y_u / (2.0 * y_t) - cf))
    return sum_bilateral(term, log_bound, trunc, center=center)


def theta_km_signed(idx: ThetaIndex, tau: ModularPoint, u: complex,
                    trunc: SeriesTruncation = SeriesTruncation()) -> complex:
    return theta_km(idx, tau, u, trunc, signed=True)


def dedekind_eta(tau: ModularPoint,
                 trunc: SeriesTruncation = SeriesTruncation()) -> complex:
    """eta(tau) = q^{1/24} * prod_{n>=1} (1 - q^n), tail-bounded truncation."""
    q = tau.q
    aq = tau.abs_q
    partial = 1.0 + 0.0j
    qn = q
    n = 1
    while True:
        partial *= 1.0 - qn
        # |prod_{k>n}(1-q^k) - 1| <= exp(s) - 1 with s = |q|^{n+1}/(1-|q|)^2
        s = aq ** (n + 1) / (1.0 - aq) ** 2
        if s < 700.0 and (math.expm1(s)) * abs(partial) < trunc.tolerance:
            break
        n += 1
        qn *= q
        if n > trunc.max_terms:
            raise TruncationError("eta product did not meet tolerance")
    return modular_power(tau, Fraction(1, 24)) * partial


def theta_nullwerte(tau: ModularPoint,
                    trunc: SeriesTruncation = SeriesTruncation()):
    """(theta00, theta01, theta10, theta11) at z = 0 via eta quotients.

    theta00 uses eta(tau)^5 / (eta(tau/2)^2 eta(2tau)^2); theta11 is exactly 0.
    """
    e1 = dedekind_eta(tau, trunc)
    e_half = dedekind_eta(tau.scaled(Fraction(1, 2)), trunc)
    e2 = dedekind_eta(tau.scaled(2), trunc)
    t00 = e1 ** 5 / (e_half ** 2 * e2 ** 2)
    t01 = e_half ** 2 / e1
    t10 = 2.0 * e2 ** 2 / e1
    return t00, t01, t10, 0.0 + 0.0j


def _eta_factor_kind_a(tau, trunc):
    """2 eta(2tau) [eta(2tau)^2 / (eta(tau) eta(4tau))]^2."""
    e1 = dedekind_eta(tau, trunc)
    e2 = dedekind_eta(tau.scaled(2), trunc)
    e4 = dedekind_eta(tau.scaled(4), trunc)
    return 2.0 * e2 * (e2 * e2 / (e1 * e4)) ** 2


def _eta_factor_kind_b(tau, trunc):
    """4 eta(2tau) [eta(4tau) / eta(2tau)]^2."""
    e2 = dedekind_eta(tau.scaled(2), trunc)
    e4 = dedekind_eta(tau.scaled(4), trunc)
    return 4.0 * e2 * (e4 / e2) ** 2


def duplication_check(variant: int, tau: ModularPoint, z: complex,
                      trunc: SeriesTruncation = SeriesTruncation()) -> complex:
    """LHS - RHS of one of the four square sum/difference formulas linking
    level tau to level 2tau; near zero on success.
    """
    z = complex(z)
    tau2 = tau.scaled(2)
    if variant == 1:
        lhs = mumford_theta(0, 0, tau, z, trunc) ** 2 + mumford_theta(0, 1, tau, z, trunc) ** 2
        rhs = _eta_factor_kind_a(tau, trunc) * mumford_theta(0, 0, tau2, 2 * z, trunc)
    elif variant == 2:
        lhs = mumford_theta(0, 0, tau, z, trunc) ** 2 - mumford_theta(0, 1, tau, z, trunc) ** 2
        rhs = _eta_factor_kind_b(tau, trunc) * mumford_theta(1, 0, tau2, 2 * z, trunc)
    elif variant == 3:
        lhs = mumford_theta(1, 0, tau, z, trunc) ** 2 + mumford_theta(1, 1, tau, z, trunc) ** 2
        rhs = _eta_factor_kind_b(tau, trunc) * mumford_theta(0, 0, tau2, 2 * z, trunc)
    elif variant == 4:
        lhs = mumford_theta(1, 0, tau, z, trunc) ** 2 - mumford_theta(1, 1, tau, z, trunc) ** 2
        rhs = _eta_factor_kind_a(tau, trunc) * mumford_theta(1, 0, tau2, 2 * z, trunc)
    else:
        raise ValueError("duplication variant must be 1..4")
    return lhs - rhs
