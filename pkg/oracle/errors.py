"""Exceptions raised by the Chebyshev/Pell oracle."""


class OracleError(Exception):
    """Base exception for oracle failures."""

    pass


class DegreeOutOfRangeError(OracleError):
    """Requested degree is outside the supported range."""


class WitnessNotFoundError(OracleError):
    """The inequality witness could not be constructed; indicates an implementation bug."""
