"""Optional numba acceleration.

Set ``CLWITNESS_DISABLE_NUMBA=1`` to force the pure-numpy kernels; they are
also used automatically when numba is not installed.
"""

import os

ENV_FLAG = "CLWITNESS_DISABLE_NUMBA"

try:
    import numba
except ImportError:  # pragma: no cover - exercised only without numba
    numba = None

DISABLED = os.environ.get(ENV_FLAG, "").strip().lower() not in ("", "0", "false", "no")
HAVE_NUMBA = numba is not None
USE_NUMBA = HAVE_NUMBA and not DISABLED


def njit(fn):
    """``numba.njit(cache=True)`` when numba is importable, identity otherwise."""
    if numba is None:
        return fn
    return numba.njit(cache=True)(fn)
