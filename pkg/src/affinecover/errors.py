"""Shared exception types.

CapacityError marks instances beyond the documented exhaustive-search
limits; it maps to CLI exit code 2, while verification failures are
reported (exit 1), never raised.
"""


class AffineCoverError(Exception):
    """Base class for package errors."""


class CapacityError(AffineCoverError):
    """Instance exceeds a documented desk-scale limit."""


class DegenerateInputError(AffineCoverError):
    """Geometrically degenerate input (zero-length segment, equal planes...)."""


class DisconnectedGraphError(AffineCoverError):
    """Operation requires a connected graph."""


class FormatError(AffineCoverError):
    """Malformed serialized artifact."""
