"""Numba availability switch.

Hot kernels exist in two flavours: a numba ``@njit`` loop and a pure numpy
(or plain Python) fallback. ``LINKDENSITY_DISABLE_NUMBA=1`` selects the
fallback by default; both stay importable so they can be benchmarked
against each other.
"""

import os

try:
    import numba
    NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover - numba is normally installed
    numba = None
    NUMBA_AVAILABLE = False

_DISABLED = os.environ.get("LINKDENSITY_DISABLE_NUMBA", "").strip().lower() in (
    "1", "true", "yes", "on")

USE_NUMBA = NUMBA_AVAILABLE and not _DISABLED


def njit(func):
    """Compile ``func`` in nopython mode, or return ``None`` without numba."""
    if not NUMBA_AVAILABLE:
        return None
    return numba.njit(cache=True, nogil=True)(func)
