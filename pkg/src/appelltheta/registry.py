"""The identity registry: one data record per verifiable identity family,
with dispatchers that evaluate either side numerically or expand it exactly.

Entries are data: id, human-readable anchor (unique), parameter grid,
vanishing-case predicate, and the names of the LHS/RHS evaluators.  The
verification harness, the formal prover and the CLI all iterate this one
registry.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Tuple

from . import appell, closed_forms, qseries
from .appell import (AppellArgs, AppellSignature, FGH_NAMES, SpecializedLine)
from .formal import identities as formal_identities
from .halfint import HalfInt, QExp
from .qseries import (DomainError, ModularPoint, SeriesTruncation)

#: Parameter values are ints, HalfInts, or short strings; params are stored
#: as sorted (name, value) tuples so descriptors stay hashable.
ParamSet = Tuple[Tuple[str, object], ...]


def params_dict(params: ParamSet) -> dict:
    return dict(params)


def param_label(params: ParamSet) -> str:
    return ",".join(f"{k}={v}" for k, v in params) if params else "-"


@dataclass(frozen=True)
class IdentityDescriptor:
    id: str
    anchor: str
    grid: Tuple[ParamSet, ...]
    formal: bool = True


def _ab(a2: int, b2: int) -> ParamSet:
    return (("a", HalfInt(a2)), ("b", HalfInt(b2)))


def _n_grid() -> Tuple[ParamSet, ...]:
    return tuple((("n", n),) for n in (0, 1, 2))


_AB_FULL = tuple(_ab(a2, b2) for a2 in (0, 1, 2, 3) for b2 in (0, 1))
_AB_HALF_ODD = tuple(_ab(a2, b2) for a2 in (1, 3) for b2 in (0, 1))
# validity for the signed pair combination: (a + 1/2) b in (1/2)Z
_AB_COMBO = tuple(ps for ps in _AB_FULL
                  if ((dict(ps)["a"].twice + 1) * dict(ps)["b"].twice) % 2 == 0)
_DOUBLING_A = tuple((("a", HalfInt(a2)),) for a2 in (0, 1, 2))


def _build_registry() -> Dict[str, IdentityDescriptor]:
    entries = []
    entries.append(IdentityDescriptor(
        "phi1_line",
        "Phi1[1,0] on the line z +- (a tau + b) equals half the sl(2|1) "
        "quotient plus half the quarter-kind correction sum",
        _AB_FULL))
    entries.append(IdentityDescriptor(
        "phi1_line_series",
        "one-variable lattice form of Phi1[1,0] on the line equals the same "
        "quotient plus correction closed form",
        _AB_FULL))
    for which, desc in (
            ("phi1_shift_11", "integer tau-shift, unshifted unit: quotient "
             "collapses onto theta11(z)^2 with unsigned theta corrections"),
            ("phi1_shift_10", "integer tau-shift, half unit shift: quotient "
             "collapses onto theta10(z)^2 with alternating corrections"),
            ("phi1_shift_01", "half-odd tau-shift, unshifted unit: quotient "
             "collapses onto theta01(z)^2 with unsigned corrections"),
            ("phi1_shift_00", "half-odd tau-shift, half unit shift: quotient "
             "collapses onto theta00(z)^2 with alternating corrections")):
        entries.append(IdentityDescriptor(which, desc, _n_grid()))
    for name in FGH_NAMES:
        entries.append(IdentityDescriptor(
            f"{name}_shifted",
            f"denominator-shifted generalisation of {name}: lattice sum with "
            "index offset n equals its nullwert-quotient plus finite "
            "correction closed form",
            _n_grid()))
    for name in FGH_NAMES:
        entries.append(IdentityDescriptor(
            name,
            f"defining sum of {name} equals its half-sum of nullwert-weighted "
            "theta quotient and theta correction",
            ((),)))
    entries.append(IdentityDescriptor(
        "sl21_denominator",
        "Phi1 - Phi2 for weight [1,0] on the line equals -i eta^3 theta11(2z) "
        "over the two shifted theta11 factors",
        _AB_FULL))
    entries.append(IdentityDescriptor(
        "osp32_denominator",
        "Phi1 + Phi2 for signed weight [1/2,1/2] on the line equals i eta^3 "
        "theta11(2z) theta11(a tau + b) over the three theta11 factors",
        _AB_HALF_ODD))
    entries.append(IdentityDescriptor(
        "half_combo",
        "Phi1 + (-1)^{2a} Phi2 for signed weight [1/2,1/2] on the line "
        "collapses to the half-kind correction sum (zero at integer a)",
        _AB_COMBO))
    entries.append(IdentityDescriptor(
        "phi1_half_line",
        "Phi1 for signed weight [1/2,1/2] on the line equals half the "
        "osp(3|2) quotient plus half the half-kind correction sum",
        _AB_HALF_ODD))
    entries.append(IdentityDescriptor(
        "doubling_plus",
        "sum of Phi1[1,0] at unit shifts 0 and 1/2 equals twice Phi1[1/2,0] "
        "at doubled level and arguments",
        _DOUBLING_A))
    entries.append(IdentityDescriptor(
        "doubling_minus",
        "difference of Phi1[1,0] at unit shifts 0 and 1/2 equals twice "
        "Phi1[1/2,1/2] at doubled level and arguments",
        _DOUBLING_A))
    for v, desc in enumerate((
            "theta00^2 + theta01^2 collapses to an eta factor times "
            "theta00 at doubled level",
            "theta00^2 - theta01^2 collapses to an eta factor times "
            "theta10 at doubled level",
            "theta10^2 + theta11^2 collapses to an eta factor times "
            "theta00 at doubled level",
            "theta10^2 - theta11^2 collapses to an eta factor times "
            "theta10 at doubled level"), start=1):
        entries.append(IdentityDescriptor(
            f"duplication_{v}", desc, ((("variant", v),),)))
    for lab, desc in (("00", "theta00 nullwert equals eta^5 over the "
                       "half-level and doubled-level eta squares"),
                      ("01", "theta01 nullwert equals the half-level eta "
                       "square over eta"),
                      ("10", "theta10 nullwert equals twice the doubled-level "
                       "eta square over eta")):
        entries.append(IdentityDescriptor(
            f"nullwert_{lab}", desc, ((),)))
    return {e.id: e for e in entries}


REGISTRY: Dict[str, IdentityDescriptor] = _build_registry()

_SIG_M1 = AppellSignature(HalfInt(2), HalfInt(0))
_SIG_HALF = AppellSignature(HalfInt(1), HalfInt(1), -1)


def _line_args(params: dict, tau: ModularPoint, z: complex) -> AppellArgs:
    return SpecializedLine(params["a"], params["b"], z).args(tau)


def is_vanishing(ident: str, params: ParamSet) -> bool:
    """True when both sides vanish identically (absolute-tolerance case)."""
    if ident == "half_combo":
        return dict(params)["a"].is_integer
    return False


def numeric_sides(ident: str, params: ParamSet, tau: ModularPoint, z: complex,
                  trunc: SeriesTruncation = SeriesTruncation(),
                  delta: float = qseries.POLE_GUARD):
    """(LHS, RHS) of a registered identity at a sample point."""
    p = params_dict(params)
    if ident == "phi1_line":
        lhs = appell.phi_1(_SIG_M1, _line_args(p, tau, z), trunc, delta)
        return lhs, closed_forms.phi1_line_rhs(p["a"], p["b"], tau, z, trunc, delta)
    if ident == "phi1_line_series":
        lhs = appell.phi1_line_series(p["a"], p["b"], tau, z, trunc, delta)
        return lhs, closed_forms.phi1_line_rhs(p["a"], p["b"], tau, z, trunc, delta)
    if ident.startswith("phi1_shift_"):
        n = p["n"]
        half_center = ident in ("phi1_shift_01", "phi1_shift_00")
        a = HalfInt(2 * n + (1 if half_center else 0))
        b = HalfInt(1 if ident in ("phi1_shift_10", "phi1_shift_00") else 0)
        line = SpecializedLine(a, b, z)
        lhs = appell.phi_1(_SIG_M1, line.args(tau), trunc, delta)
        return lhs, closed_forms.phi1_shift_rhs(ident, n, tau, z, trunc, delta)
    if ident.endswith("_shifted"):
        lhs = appell.specialized_series(ident, p["n"], tau, z, trunc, delta)
        return lhs, closed_forms.shifted_rhs(ident, p["n"], tau, z, trunc, delta)
    if ident in FGH_NAMES:
        lhs = appell.fgh_series(ident, tau, z, trunc, delta)
        return lhs, closed_forms.fgh_rhs(ident, tau, z, trunc, delta)
    if ident == "sl21_denominator":
        lhs = appell.phi_diff(_SIG_M1, _line_args(p, tau, z), trunc, delta)
        return lhs, closed_forms.sl21_denominator_rhs(tau, z, p["a"], p["b"],
                                                      trunc, delta)
    if ident == "osp32_denominator":
        _require_half_odd(p["a"])
        lhs = appell.phi_star(_SIG_HALF, _line_args(p, tau, z), trunc, delta)
        return lhs, closed_forms.osp32_denominator_rhs(tau, z, p["a"], p["b"],
                                                       trunc, delta)
    if ident == "half_combo":
        a, b = p["a"], p["b"]
        if ((a.twice + 1) * b.twice) % 2:
            raise DomainError("half_combo needs (a + 1/2) b in (1/2)Z")
        args = _line_args(p, tau, z)
        sign = 1.0 if a.is_integer else -1.0
        lhs = appell.phi_1(_SIG_HALF, args, trunc, delta) \
            + sign * appell.phi_2(_SIG_HALF, args, trunc, delta)
        rhs = closed_forms.correction_sum(
            closed_forms.CorrectionSum(a, b, "half"), tau, z, trunc)
        return lhs, rhs
    if ident == "phi1_half_line":
        _require_half_odd(p["a"])
        lhs = appell.phi_1(_SIG_HALF, _line_args(p, tau, z), trunc, delta)
        return lhs, closed_forms.phi1_half_line_rhs(p["a"], p["b"], tau, z,
                                                    trunc, delta)
    if ident in ("doubling_plus", "doubling_minus"):
        variant = "+" if ident == "doubling_plus" else "-"
        return appell.doubling_sides(variant, float(p["a"]), tau, z, trunc, delta)
    if ident.startswith("duplication_"):
        return qseries.duplication_sides(p["variant"], tau, z, trunc)
    if ident.startswith("nullwert_"):
        lab = ident.split("_")[1]
        direct = closed_forms.theta_ab(lab, tau, 0.0, trunc)
        quotients = qseries.theta_nullwerte(tau, trunc)
        idx = {"00": 0, "01": 1, "10": 2}[lab]
        return direct, quotients[idx]
    raise KeyError(f"unknown identity {ident!r}")


def _require_half_odd(a: HalfInt):
    if not a.is_half_odd:
        raise DomainError("identity requires a in (1/2) + Z, a > 0")


def formal_sides(ident: str, params: ParamSet, order: QExp):
    """(LHS, RHS) exact expansions of a registered identity."""
    p = params_dict(params)
    FI = formal_identities
    if ident == "phi1_line" or ident == "phi1_line_series":
        return FI.phi1_line_pair(p["a"], p["b"], order)
    if ident.startswith("phi1_shift_"):
        return FI.phi1_shift_pair(ident, p["n"], order)
    if ident.endswith("_shifted"):
        return FI.shifted_pair(ident, p["n"], order)
    if ident in FGH_NAMES:
        return FI.fgh_pair(ident, order)
    if ident == "sl21_denominator":
        return FI.sl21_pair(p["a"], p["b"], order)
    if ident == "osp32_denominator":
        _require_half_odd(p["a"])
        return FI.osp32_pair(p["a"], p["b"], order)
    if ident == "half_combo":
        a, b = p["a"], p["b"]
        if ((a.twice + 1) * b.twice) % 2:
            raise DomainError("half_combo needs (a + 1/2) b in (1/2)Z")
        return FI.half_combo_pair(a, b, order)
    if ident == "phi1_half_line":
        _require_half_odd(p["a"])
        return FI.phi1_half_line_pair(p["a"], p["b"], order)
    if ident in ("doubling_plus", "doubling_minus"):
        variant = "+" if ident == "doubling_plus" else "-"
        return FI.doubling_pair(variant, p["a"], order)
    if ident.startswith("duplication_"):
        return FI.duplication_pair(p["variant"], order)
    if ident.startswith("nullwert_"):
        return FI.nullwert_pair(ident.split("_")[1], order)
    raise KeyError(f"unknown identity {ident!r}")


def prove_identity(ident: str, params: ParamSet, order) -> "FormalQSeries":
    """LHS - RHS as an exact series, truncated to the requested order.

    The identity holds exactly through that order iff the result is zero."""
    order = QExp.of(order)
    lhs, rhs = formal_sides(ident, params, order)
    residual = (lhs - rhs).truncate(order)
    if residual.order < order:
        raise ArithmeticError(
            f"internal padding too small for {ident}: residual known only "
            f"below {residual.order}")
    return residual


from .formal.series import FormalQSeries  # noqa: E402  (type for docstring users)
