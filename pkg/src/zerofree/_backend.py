"""Kernel backend selection.

The hot loops (quadruple sweeps, the Moebius oracle scan, Ryser's formula)
have two implementations: numba ``@njit`` kernels and vectorised numpy
fallbacks.  Set ``ZF_NUMBA=0`` in the environment to force the numpy path,
for debugging or on platforms without numba.
"""
import os

try:
    import numba  # noqa: F401

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and os.environ.get("ZF_NUMBA", "1").strip().lower() not in {"0", "false", "no", "off"}

if USE_NUMBA:
    from . import _kernels_numba as kernels
else:  # pragma: no cover - exercised with ZF_NUMBA=0
    from . import _kernels_numpy as kernels

BACKEND = "numba" if USE_NUMBA else "numpy"
