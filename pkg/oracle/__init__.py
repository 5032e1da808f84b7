"""Chebyshev/Pell verification channel for the tangent-pair closure angles."""

from oracle.errors import DegreeOutOfRangeError, OracleError, WitnessNotFoundError
from oracle.models import BridgeReport, PellCertificate, PellFailure, Poly
from oracle.pell import alpha_set_bridge, pell_alpha_values, pell_certificate, pell_failure_at_alpha_one
from oracle.polynomials import chebyshev_Q, chebyshev_T, chebyshev_T_values

__all__ = [
    "BridgeReport",
    "DegreeOutOfRangeError",
    "OracleError",
    "PellCertificate",
    "PellFailure",
    "Poly",
    "WitnessNotFoundError",
    "alpha_set_bridge",
    "chebyshev_Q",
    "chebyshev_T",
    "chebyshev_T_values",
    "pell_alpha_values",
    "pell_certificate",
    "pell_failure_at_alpha_one",
]
