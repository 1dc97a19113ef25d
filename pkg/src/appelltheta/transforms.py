"""Modular behaviour of the twelve named functions: the 24 displayed S- and
T-transformation laws and the leading asymptotics along tau = iT as T -> 0,
including the four theta asymptotics rows."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .appell import FGH_NAMES, fgh_series
from .closed_forms import theta_ab
from .qseries import (POLE_GUARD, DomainError, ModularPoint, SeriesTruncation)

_THETA_NAMES = ("theta00", "theta01", "theta10", "theta11")


def _eval_function(name: str, tau: ModularPoint, z: complex,
                   trunc: SeriesTruncation, delta: float) -> complex:
    if name in FGH_NAMES:
        return fgh_series(name, tau, z, trunc, delta)
    if name in _THETA_NAMES:
        return theta_ab(name[5:], tau, z, trunc)
    raise ValueError(f"unknown function {name!r}")


FUNCTION_NAMES = FGH_NAMES + _THETA_NAMES


@dataclass(frozen=True)
class RuleTerm:
    """One additive term of a transformation law's right-hand side:
    coeff * tau^tau_pow * (-i tau)^{1/2 if half_sqrt} * e^{pi i (z^2 [+1/4])/tau}
    * q^{q_exp} * function(tau, z)."""

    coeff: complex
    tau_pow: int
    half_sqrt: bool
    plus_quarter: bool
    q_exp: Fraction
    func: str


@dataclass(frozen=True)
class TransformRule:
    source: str
    kind: str  # "S" or "T"
    terms: Tuple[RuleTerm, ...]


def _term(coeff, tau_pow, half_sqrt, plus_quarter, q_exp, func) -> RuleTerm:
    return RuleTerm(coeff, tau_pow, half_sqrt, plus_quarter, Fraction(q_exp), func)


_E8 = Fraction(-1, 8)

S_RULES = {
    "f1": TransformRule("f1", "S", (
        _term(1, 1, False, False, 0, "f1"),
        _term(-0.5, 1, False, False, 0, "theta00"),
        _term(0.5, 0, True, False, 0, "theta00"))),
    "f2": TransformRule("f2", "S", (
        _term(-1j, 1, False, False, 0, "f2"),
        _term(0.5, 1, False, False, 0, "theta11"),
        _term(-0.5, 0, True, False, 0, "theta11"))),
    "f3": TransformRule("f3", "S", (
        _term(1, 1, False, False, 0, "f4"),
        _term(-0.5, 1, False, False, 0, "theta10"),
        _term(0.5, 0, True, False, 0, "theta10"))),
    "f4": TransformRule("f4", "S", (
        _term(1, 1, False, False, 0, "f3"),
        _term(-0.5, 1, False, False, 0, "theta01"),
        _term(0.5, 0, True, False, 0, "theta01"))),
    "g1": TransformRule("g1", "S", (
        _term(1, 1, False, False, 0, "h1"),
        _term(-0.5, 1, False, False, 0, "theta01"),
        _term(1, 0, True, True, 0, "theta01"))),
    "g2": TransformRule("g2", "S", (
        _term(1j, 1, False, False, 0, "h2"),
        _term(-0.5, 1, False, False, 0, "theta11"),
        _term(1, 0, True, True, 0, "theta11"))),
    "g3": TransformRule("g3", "S", (
        _term(1, 1, False, False, 0, "h3"),
        _term(-0.5, 1, False, False, 0, "theta00"),
        _term(1, 0, True, True, 0, "theta00"))),
    "g4": TransformRule("g4", "S", (
        _term(1, 1, False, False, 0, "h4"),
        _term(-0.5, 1, False, False, 0, "theta10"),
        _term(1, 0, True, True, 0, "theta10"))),
    "h1": TransformRule("h1", "S", (
        _term(1, 1, False, False, 0, "g1"),
        _term(-1, 1, False, False, _E8, "theta10"),
        _term(0.5, 0, True, False, 0, "theta10"))),
    "h2": TransformRule("h2", "S", (
        _term(1j, 1, False, False, 0, "g2"),
        _term(1, 1, False, False, _E8, "theta11"),
        _term(-0.5, 0, True, False, 0, "theta11"))),
    "h3": TransformRule("h3", "S", (
        _term(1, 1, False, False, 0, "g3"),
        _term(-1, 1, False, False, _E8, "theta00"),
        _term(0.5, 0, True, False, 0, "theta00"))),
    "h4": TransformRule("h4", "S", (
        _term(1, 1, False, False, 0, "g4"),
        _term(-1, 1, False, False, _E8, "theta01"),
        _term(0.5, 0, True, False, 0, "theta01"))),
}

_E4 = cmath.exp(0.25j * math.pi)

T_RULES = {
    "f1": TransformRule("f1", "T", (_term(1, 0, False, False, 0, "h1"),)),
    "f2": TransformRule("f2", "T", (_term(_E4, 0, False, False, 0, "h2"),)),
    "f3": TransformRule("f3", "T", (_term(1, 0, False, False, 0, "h3"),)),
    "f4": TransformRule("f4", "T", (_term(_E4, 0, False, False, 0, "h4"),)),
    "g1": TransformRule("g1", "T", (_term(1, 0, False, False, 0, "g1"),)),
    "g2": TransformRule("g2", "T", (_term(1, 0, False, False, 0, "g2"),)),
    "g3": TransformRule("g3", "T", (_term(_E4.conjugate(), 0, False, False, 0, "g4"),)),
    "g4": TransformRule("g4", "T", (_term(_E4.conjugate(), 0, False, False, 0, "g3"),)),
    "h1": TransformRule("h1", "T", (_term(1, 0, False, False, 0, "f1"),)),
    "h2": TransformRule("h2", "T", (_term(_E4, 0, False, False, 0, "f2"),)),
    "h3": TransformRule("h3", "T", (_term(1, 0, False, False, 0, "f3"),)),
    "h4": TransformRule("h4", "T", (_term(_E4, 0, False, False, 0, "f4"),)),
}


def rule(kind: str, source: str) -> TransformRule:
    table = S_RULES if kind == "S" else T_RULES
    return table[source]


def check_transform(rule: TransformRule, tau: ModularPoint, z: complex,
                    trunc: SeriesTruncation = SeriesTruncation(),
                    delta: float = POLE_GUARD):
    """(LHS, RHS) with LHS the source function at the transformed point and
    RHS the rule's combination at (tau, z).  (-i tau)^{1/2} is the principal
    square root."""
    t = tau.tau
    z = complex(z)
    if rule.kind == "S":
        lhs = _eval_function(rule.source, ModularPoint(-1.0 / t), z / t,
                             trunc, delta)
    else:
        lhs = _eval_function(rule.source, ModularPoint(t + 1.0), z, trunc, delta)
    half = cmath.sqrt(-1j * t)
    phase_plain = cmath.exp(1j * math.pi * z * z / t)
    phase_quarter = cmath.exp(1j * math.pi * (z * z + 0.25) / t)
    rhs = 0.0j
    for term in rule.terms:
        v = term.coeff * _eval_function(term.func, tau, z, trunc, delta)
        if term.tau_pow:
            v *= t ** term.tau_pow
        if term.half_sqrt:
            v *= half
        if rule.kind == "S":
            v *= phase_quarter if term.plus_quarter else phase_plain
        if term.q_exp:
            v *= cmath.exp(2j * math.pi * t * float(term.q_exp))
        rhs += v
    return lhs, rhs


def transform_residual(rule: TransformRule, tau: ModularPoint, z: complex,
                       trunc: SeriesTruncation = SeriesTruncation(),
                       delta: float = POLE_GUARD) -> complex:
    lhs, rhs = check_transform(rule, tau, z, trunc, delta)
    return lhs - rhs


@dataclass(frozen=True)
class AsymptoticRule:
    """Leading behaviour of func(tau, a*tau) as tau = iT, T -> 0:
    scale * (-i tau)^power * trig(a pi) * [e^{-pi i/(4 tau)}]."""

    func: str
    power: Fraction
    has_exp_factor: bool
    trig: str  # cot | tan | sin | cos | csc | sec | const
    scale: complex


ASYMPTOTIC_RULES = {
    "f1": AsymptoticRule("f1", Fraction(-1), False, "cot", 0.5),
    "f2": AsymptoticRule("f2", Fraction(-1), True, "cos", 1.0),
    "f3": AsymptoticRule("f3", Fraction(-1), True, "sin", 1.0),
    "f4": AsymptoticRule("f4", Fraction(-1), False, "tan", -0.5),
    "g1": AsymptoticRule("g1", Fraction(-1), False, "cot", 0.5),
    "g2": AsymptoticRule("g2", Fraction(-1), True, "cos", -1.0),
    "g3": AsymptoticRule("g3", Fraction(-1), False, "tan", -0.5),
    "g4": AsymptoticRule("g4", Fraction(-1), True, "sin", 1.0),
    "h1": AsymptoticRule("h1", Fraction(-1), False, "csc", 0.5),
    "h2": AsymptoticRule("h2", Fraction(-1), False, "sec", 0.5),
    "h3": AsymptoticRule("h3", Fraction(-1, 2), False, "const", 0.5),
    "h4": AsymptoticRule("h4", Fraction(-1, 2), False, "const", 0.5),
    "theta00": AsymptoticRule("theta00", Fraction(-1, 2), False, "const", 1.0),
    "theta01": AsymptoticRule("theta01", Fraction(-1, 2), True, "cos", 2.0),
    "theta10": AsymptoticRule("theta10", Fraction(-1, 2), False, "const", 1.0),
    "theta11": AsymptoticRule("theta11", Fraction(-1, 2), True, "sin", -2j),
}

#: Points where the trig factors vanish or blow up, as offsets mod 1.
_TRIG_SINGULAR = {
    "cot": (0.0, 0.5), "tan": (0.5, 0.0), "csc": (0.0,), "sec": (0.5,),
    "cos": (0.5,), "sin": (0.0,), "const": (),
}

DEFAULT_T_GRID = (0.2, 0.1, 0.05)


def _trig_value(trig: str, x: float) -> complex:
    if trig == "const":
        return 1.0
    s, c = math.sin(x), math.cos(x)
    return {"cot": c / s, "tan": s / c, "csc": 1.0 / s, "sec": 1.0 / c,
            "cos": c, "sin": s}[trig]


def check_asymptotic(rule: AsymptoticRule, a: float,
                     t_grid=DEFAULT_T_GRID,
                     trunc: SeriesTruncation = SeriesTruncation(),
                     delta: float = POLE_GUARD):
    """Ratios LHS/RHS along tau = iT for each T in the grid; exponentially
    small rules have the factor e^{-pi/(4T)} divided out of both sides."""
    guard = _TRIG_SINGULAR[rule.trig]
    dist = min((abs((a - s) - round(a - s)) for s in guard), default=1.0)
    if dist < 0.05:
        raise DomainError(f"a = {a} too close to a singularity of {rule.trig}")
    ratios = []
    for T in t_grid:
        tau = ModularPoint(1j * T)
        z = a * tau.tau
        lhs = _eval_function(rule.func, tau, z, trunc, delta)
        rhs = rule.scale * T ** float(rule.power) * _trig_value(rule.trig, a * math.pi)
        if rule.has_exp_factor:
            lhs *= math.exp(math.pi / (4.0 * T))
        ratios.append(lhs / rhs)
    return ratios
