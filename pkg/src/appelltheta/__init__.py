"""Rank-1 Appell sums, Mumford theta functions, and exact q-series
verification of the identities relating them."""

from .halfint import HalfInt, QExp, half
from .qseries import (DomainError, ModularPoint, PoleProximityError,
                      SeriesTruncation, ThetaIndex, TruncationError,
                      dedekind_eta, modular_power, mumford_theta,
                      theta_km, theta_km_signed, theta_nullwerte)

__all__ = [
    "HalfInt", "QExp", "half",
    "ModularPoint", "SeriesTruncation", "ThetaIndex",
    "DomainError", "PoleProximityError", "TruncationError",
    "modular_power", "dedekind_eta", "mumford_theta",
    "theta_km", "theta_km_signed", "theta_nullwerte",
]
