"""Exact q-expansion engine: Laurent series in q^{1/24} over Q(i)(y)."""

from .coeffs import CoeffFunction, LaurentPoly
from .expand import (appell_lattice, eta_half_squared, eta_series,
                     mumford_series, scalar_weight_series, theta_km_series)
from .gaussian import GR_I, GR_ONE, GR_ZERO, GaussianRational, i_power
from .series import FormalQSeries

__all__ = [
    "GaussianRational", "GR_ZERO", "GR_ONE", "GR_I", "i_power",
    "LaurentPoly", "CoeffFunction", "FormalQSeries",
    "eta_series", "eta_half_squared", "mumford_series", "theta_km_series",
    "appell_lattice", "scalar_weight_series",
]
