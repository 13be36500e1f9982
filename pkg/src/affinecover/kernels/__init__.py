"""Backend selection for the integer predicate kernels.

The compiled extension is preferred when importable; set
``AFFINECOVER_KERNEL=py`` to force the pure-Python fallback. Both
backends agree bit for bit on every input within the 64-bit guard
(``MAX_FAST_COORD``); larger coordinates must go through ``pure``,
whose plain Python ints never overflow.
"""

import os

from . import _pure as pure

if os.environ.get("AFFINECOVER_KERNEL", "").lower() in {"py", "python", "pure"}:
    impl = pure
else:
    try:
        from . import _fast as impl  # type: ignore[no-redef]
    except ImportError:
        impl = pure

BACKEND = impl.BACKEND

# Coordinates bounded by this keep every intermediate product of the
# compiled predicates inside 64 bits.
MAX_FAST_COORD = 1 << 20

DISJOINT = pure.DISJOINT
SHARED_ENDPOINT = pure.SHARED_ENDPOINT
PROPER_CROSSING = pure.PROPER_CROSSING
ENDPOINT_IN_INTERIOR = pure.ENDPOINT_IN_INTERIOR
COLLINEAR_OVERLAP = pure.COLLINEAR_OVERLAP

__all__ = [
    "BACKEND",
    "MAX_FAST_COORD",
    "impl",
    "pure",
    "DISJOINT",
    "SHARED_ENDPOINT",
    "PROPER_CROSSING",
    "ENDPOINT_IN_INTERIOR",
    "COLLINEAR_OVERLAP",
]
