"""Exact-arithmetic laboratory for line and plane covers of graph drawings.

Everything is computed over the rationals; no floating point enters any
predicate. Hot integer kernels live in :mod:`affinecover.kernels` with a
compiled backend and a pure-Python fallback selected at import time.
"""

__version__ = "0.1.0"

from .errors import CapacityError, DegenerateInputError, DisconnectedGraphError

__all__ = [
    "CapacityError",
    "DegenerateInputError",
    "DisconnectedGraphError",
    "__version__",
]
