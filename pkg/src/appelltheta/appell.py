"""Appell-type sums: the general two-variable series Phi_1 / Phi_2 with their
difference and sum, the one-variable lattice sums obtained by specialising the
arguments to z +/- (a*tau + b), and the twelve named series f1..f4, g1..g4,
h1..h4.

Every sum shares one kernel shape

    sum_j eps^j e^{2 pi i (w j + p) z} q^{A j^2 + B j + C} / (1 - sigma e^{2 pi i z} q^{j + c})

with a quadratic q-exponent, so a single outward summation routine with a
geometric tail bound serves all of them.  Denominators are pole-guarded: a
term whose denominator comes within `delta` of zero raises PoleProximityError
naming the offending index instead of returning a silently wrong value.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

from .halfint import HalfInt
from .qseries import (POLE_GUARD, ModularPoint, PoleProximityError,
                      SeriesTruncation, sum_bilateral)

TWO_PI = 2.0 * math.pi
_LOG2 = math.log(2.0)


@dataclass(frozen=True)
class AppellSignature:
    """Weight data (m, s) in (1/2)N x (1/2)Z plus the alternating sign."""

    m: HalfInt
    s: HalfInt
    sign: int = 1

    def __post_init__(self):
        object.__setattr__(self, "m", HalfInt.of(self.m))
        object.__setattr__(self, "s", HalfInt.of(self.s))
        if self.m.twice <= 0:
            raise ValueError("m must be a positive half-integer")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")


@dataclass(frozen=True)
class AppellArgs:
    """Arguments (tau, z1, z2, t) of the two-variable sums."""

    tau: ModularPoint
    z1: complex
    z2: complex
    t: complex = 0.0

    def swapped(self) -> "AppellArgs":
        return AppellArgs(self.tau, self.z2, self.z1, self.t)


@dataclass(frozen=True)
class SpecializedLine:
    """The substitution z1 = z + a*tau + b, z2 = z - a*tau - b, t = 0."""

    a: HalfInt
    b: HalfInt
    z: complex

    def __post_init__(self):
        object.__setattr__(self, "a", HalfInt.of(self.a))
        object.__setattr__(self, "b", HalfInt.of(self.b))
        if self.a.twice < 0:
            raise ValueError("line parameter a must be >= 0")

    def args(self, tau: ModularPoint) -> AppellArgs:
        shift = float(self.a) * tau.tau + float(self.b)
        return AppellArgs(tau, self.z + shift, self.z - shift, 0.0)


def _den_crossovers(im_z1: float, y: float, slope: float = 1.0):
    """First index with |u_j| <= 1/2 and last with |u_j| >= 2 for
    u_j = e^{2 pi i z1} q^{slope*j + const absorbed in z1}."""
    hi_safe = math.ceil((_LOG2 / TWO_PI - im_z1) / (slope * y))
    lo_safe = math.floor((-_LOG2 / TWO_PI - im_z1) / (slope * y))
    return lo_safe, hi_safe


def phi_1(sig: AppellSignature, args: AppellArgs,
          trunc: SeriesTruncation = SeriesTruncation(),
          delta: float = POLE_GUARD) -> complex:
    """First Appell sum: e^{-2 pi i m t} sum_j (+-1)^j
    e^{2 pi i m j (z1+z2) + 2 pi i s z1} q^{m j^2 + s j} / (1 - e^{2 pi i z1} q^j).
    """
    m = float(sig.m)
    s = float(sig.s)
    eps = sig.sign
    t = args.tau.tau
    y = t.imag
    z1 = complex(args.z1)
    w = z1 + complex(args.z2)

    def term(j: int) -> complex:
        u = cmath.exp(2j * math.pi * (z1 + j * t))
        den = 1.0 - u
        if abs(den) < delta:
            raise PoleProximityError(
                f"denominator within {delta} of zero at index {j}", index=j)
        num = cmath.exp(2j * math.pi * (m * j * w + s * z1 + t * (m * j * j + s * j)))
        if eps < 0 and j % 2:
            num = -num
        return num / den

    def log_num(j: int) -> float:
        return -TWO_PI * (y * (m * j * j + s * j) + m * j * w.imag + s * z1.imag)

    lo_safe, hi_safe = _den_crossovers(z1.imag, y)

    def log_bound(j: int) -> float:
        b = log_num(j) + _LOG2
        if j <= lo_safe:
            b += TWO_PI * (z1.imag + j * y)  # |1/(1-u)| <= 2/|u|
        return b

    center = int(round(-(s * y + m * w.imag) / (2.0 * m * y)))
    pref = cmath.exp(-2j * math.pi * m * complex(args.t))
    return pref * sum_bilateral(term, log_bound, trunc, center=center,
                                hi_safe=hi_safe, lo_safe=lo_safe)


def phi_2(sig: AppellSignature, args: AppellArgs,
          trunc: SeriesTruncation = SeriesTruncation(),
          delta: float = POLE_GUARD) -> complex:
    """Second Appell sum: e^{-2 pi i m t} sum_j (+-1)^j
    e^{-2 pi i m j (z1+z2) - 2 pi i s z2} q^{m j^2 + s j} / (1 - e^{-2 pi i z2} q^j).
    """
    m = float(sig.m)
    s = float(sig.s)
    eps = sig.sign
    t = args.tau.tau
    y = t.imag
    z2 = complex(args.z2)
    w = complex(args.z1) + z2

    def term(j: int) -> complex:
        u = cmath.exp(2j * math.pi * (-z2 + j * t))
        den = 1.0 - u
        if abs(den) < delta:
            raise PoleProximityError(
                f"denominator within {delta} of zero at index {j}", index=j)
        num = cmath.exp(2j * math.pi * (-m * j * w - s * z2 + t * (m * j * j + s * j)))
        if eps < 0 and j % 2:
            num = -num
        return num / den

    def log_num(j: int) -> float:
        return -TWO_PI * (y * (m * j * j + s * j) - m * j * w.imag + s * z2.imag)

    lo_safe, hi_safe = _den_crossovers(-z2.imag, y)

    def log_bound(j: int) -> float:
        b = log_num(j) + _LOG2
        if j <= lo_safe:
            b += TWO_PI * (-z2.imag + j * y)
        return b

    center = int(round(-(s * y - m * w.imag) / (2.0 * m * y)))
    pref = cmath.exp(-2j * math.pi * m * complex(args.t))
    return pref * sum_bilateral(term, log_bound, trunc, center=center,
                                hi_safe=hi_safe, lo_safe=lo_safe)


def phi_diff(sig: AppellSignature, args: AppellArgs,
             trunc: SeriesTruncation = SeriesTruncation(),
             delta: float = POLE_GUARD) -> complex:
    """Phi_1 - Phi_2 with shared truncation."""
    return phi_1(sig, args, trunc, delta) - phi_2(sig, args, trunc, delta)


def phi_star(sig: AppellSignature, args: AppellArgs,
             trunc: SeriesTruncation = SeriesTruncation(),
             delta: float = POLE_GUARD) -> complex:
    """Phi_1 + Phi_2 with shared truncation."""
    return phi_1(sig, args, trunc, delta) + phi_2(sig, args, trunc, delta)


@dataclass(frozen=True)
class LatticeSum:
    """Data for one one-variable sum
    scale * sum_j eps^j e^{2 pi i (w j + p) z} q^{A j^2 + B j + C}
                 / (1 - sigma e^{2 pi i z} q^{j + shift}).
    """

    eps: int
    p: Fraction
    A: Fraction
    B: Fraction
    C: Fraction
    sigma: int
    shift: Fraction
    w: int = 1
    scale: float = 1.0

    def eval(self, tau: ModularPoint, z: complex,
             trunc: SeriesTruncation = SeriesTruncation(),
             delta: float = POLE_GUARD) -> complex:
        t = tau.tau
        y = t.imag
        z = complex(z)
        eps, sigma, w = self.eps, self.sigma, self.w
        p, A, B, C = float(self.p), float(self.A), float(self.B), float(self.C)
        shift = float(self.shift)

        def term(j: int) -> complex:
            u = sigma * cmath.exp(2j * math.pi * (z + (j + shift) * t))
            den = 1.0 - u
            if abs(den) < delta:
                raise PoleProximityError(
                    f"denominator within {delta} of zero at index {j}", index=j)
            num = cmath.exp(2j * math.pi * ((w * j + p) * z + (A * j * j + B * j + C) * t))
            if eps < 0 and j % 2:
                num = -num
            return num / den

        def log_num(j: int) -> float:
            return -TWO_PI * (y * (A * j * j + B * j + C) + (w * j + p) * z.imag)

        lo_safe, hi_safe = _den_crossovers(z.imag + shift * y, y)

        def log_bound(j: int) -> float:
            b = log_num(j) + _LOG2
            if j <= lo_safe:
                b += TWO_PI * (z.imag + (j + shift) * y)
            return b

        center = int(round(-(B * y + w * z.imag) / (2.0 * A * y)))
        return self.scale * sum_bilateral(term, log_bound, trunc, center=center,
                                          hi_safe=hi_safe, lo_safe=lo_safe)


_H = Fraction(1, 2)
_E = Fraction(1, 8)

#: Defining sums of the twelve named one-variable functions.
FGH_SERIES = {
    "f1": LatticeSum(+1, Fraction(0), _H, Fraction(0), Fraction(0), +1, Fraction(0)),
    "f2": LatticeSum(-1, _H, _H, _H, _E, -1, _H),
    "f3": LatticeSum(-1, Fraction(0), _H, Fraction(0), Fraction(0), -1, Fraction(0)),
    "f4": LatticeSum(+1, _H, _H, _H, _E, +1, _H),
    "g1": LatticeSum(+1, -_H, _H, -_H, Fraction(0), +1, Fraction(0)),
    "g2": LatticeSum(-1, -_H, _H, -_H, Fraction(0), -1, Fraction(0)),
    "g3": LatticeSum(+1, Fraction(0), _H, Fraction(0), -_E, +1, _H),
    "g4": LatticeSum(-1, Fraction(0), _H, Fraction(0), -_E, -1, _H),
    "h1": LatticeSum(-1, Fraction(0), _H, Fraction(0), Fraction(0), +1, Fraction(0)),
    "h2": LatticeSum(-1, _H, _H, _H, _E, +1, _H),
    "h3": LatticeSum(+1, Fraction(0), _H, Fraction(0), Fraction(0), -1, Fraction(0)),
    "h4": LatticeSum(+1, _H, _H, _H, _E, -1, _H),
}

FGH_NAMES = tuple(FGH_SERIES)


def fgh_series(name: str, tau: ModularPoint, z: complex,
               trunc: SeriesTruncation = SeriesTruncation(),
               delta: float = POLE_GUARD) -> complex:
    """Defining sum of one of f1..f4, g1..g4, h1..h4."""
    try:
        spec = FGH_SERIES[name]
    except KeyError:
        raise ValueError(f"unknown series {name!r}") from None
    return spec.eval(tau, z, trunc, delta)


def shifted_spec(base: str, n: int) -> LatticeSum:
    """The n-shifted generalisation of the named series (denominator index
    moved to j + n or j + n + 1/2; the f/g families carry a factor 2)."""
    if n < 0:
        raise ValueError("shift parameter n must be >= 0")
    spec = FGH_SERIES[base]
    scale = 1.0 if base.startswith("h") else 2.0
    # g1/g2 shifted sums use the full square exponent (j-1/2)^2/2, i.e. C=1/8;
    # g3/g4 shifted sums drop their -1/8 (plain j^2/2 exponent).
    C = spec.C
    if base in ("g1", "g2"):
        C = _E
    elif base in ("g3", "g4"):
        C = Fraction(0)
    return LatticeSum(spec.eps, spec.p, spec.A, spec.B, C, spec.sigma,
                      spec.shift + n, spec.w, scale)


SHIFTED_FAMILIES = tuple(f"{name}_shifted" for name in FGH_NAMES)


def specialized_series(family: str, n: int, tau: ModularPoint, z: complex,
                       trunc: SeriesTruncation = SeriesTruncation(),
                       delta: float = POLE_GUARD) -> complex:
    """One of the twelve n-shifted one-variable sums ("<name>_shifted")."""
    if not family.endswith("_shifted") or family[:-8] not in FGH_SERIES:
        raise ValueError(f"unknown specialized family {family!r}")
    return shifted_spec(family[:-8], n).eval(tau, z, trunc, delta)


def phi1_line_series(a: HalfInt, b: HalfInt, tau: ModularPoint, z: complex,
                     trunc: SeriesTruncation = SeriesTruncation(),
                     delta: float = POLE_GUARD) -> complex:
    """One-variable form of Phi_1^{[1,0]} on the line:
    sum_j e^{4 pi i j z} q^{j^2} / (1 - (-1)^{2b} e^{2 pi i z} q^{j + a})."""
    a = HalfInt.of(a)
    b = HalfInt.of(b)
    sigma = -1 if b.is_half_odd else +1
    spec = LatticeSum(+1, Fraction(0), Fraction(1), Fraction(0), Fraction(0),
                      sigma, a.as_fraction(), w=2)
    return spec.eval(tau, z, trunc, delta)


def doubling_check(variant: str, a: complex, tau: ModularPoint, z: complex,
                   trunc: SeriesTruncation = SeriesTruncation(),
                   delta: float = POLE_GUARD) -> complex:
    """Residual of the level-doubling relation

        Phi_1^{[1,0]}(tau, z+a*tau, z-a*tau, 0)
          +- Phi_1^{[1,0]}(tau, z+a*tau+1/2, z-a*tau-1/2, 0)
        = 2 Phi_1^{[1/2, 0 or 1/2]}(2*tau, 2(z+a*tau), 2(z-a*tau), 0)

    for any complex a ('+' pairs with s = 0, '-' with s = 1/2).
    """
    if variant not in ("+", "-"):
        raise ValueError("doubling variant must be '+' or '-'")
    t = tau.tau
    shift = a * t
    args0 = AppellArgs(tau, z + shift, z - shift, 0.0)
    args_half = AppellArgs(tau, z + shift + 0.5, z - shift - 0.5, 0.0)
    one = AppellSignature(HalfInt.of(1), HalfInt.of(0))
    lhs1 = phi_1(one, args0, trunc, delta)
    lhs2 = phi_1(one, args_half, trunc, delta)
    tau2 = tau.scaled(2)
    args2 = AppellArgs(tau2, 2 * (z + shift), 2 * (z - shift), 0.0)
    if variant == "+":
        sig = AppellSignature(HalfInt(1), HalfInt.of(0))
        return lhs1 + lhs2 - 2.0 * phi_1(sig, args2, trunc, delta)
    sig = AppellSignature(HalfInt(1), HalfInt(1))
    return lhs1 - lhs2 - 2.0 * phi_1(sig, args2, trunc, delta)
