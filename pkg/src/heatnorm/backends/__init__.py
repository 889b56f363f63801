"""Kernel backend selection.

The package ships two interchangeable implementations of its hot inner
loops (exponential-integral evaluation and Gauss-Kronrod panel sums):

* ``numba`` -- ``@njit``-compiled scalar loops (default when numba imports),
* ``numpy`` -- vectorized pure-numpy fallback.

Selection happens once at import time from the environment variable
``HEATNORM_BACKEND`` with values ``auto`` (default), ``numba`` or ``numpy``.
``benchmarks/bench_backends.py`` times the two side by side.
"""

import os

from . import numpy_impl

_requested = os.environ.get("HEATNORM_BACKEND", "auto").strip().lower()
if _requested not in ("auto", "numba", "numpy"):
    raise ValueError(
        f"HEATNORM_BACKEND must be 'auto', 'numba' or 'numpy', got {_requested!r}"
    )

if _requested == "numpy":
    _impl = numpy_impl
    _backend_name = "numpy"
else:
    try:
        from . import numba_impl as _impl

        _backend_name = "numba"
    except ImportError:
        if _requested == "numba":
            raise
        _impl = numpy_impl
        _backend_name = "numpy"

e1 = _impl.e1
e1_scaled = _impl.e1_scaled
gk15_radial = _impl.gk15_radial

EULER_GAMMA = numpy_impl.EULER_GAMMA
UNDERFLOW_CUTOFF = numpy_impl.UNDERFLOW_CUTOFF


def backend_name() -> str:
    """Name of the kernel implementation picked at import time."""
    return _backend_name
