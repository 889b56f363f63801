"""Special-function kernel: exponential integral E1, gamma, sphere areas.

All functions accept a positive float or an array of positive floats and
return the matching shape.  Domain violations (non-positive, NaN, infinite
input) raise ``ValueError``.

The exponential integral is evaluated by a power series below x = 1,

    E1(x) = -gamma - log x + sum_{k>=1} (-1)^(k+1) x^k / (k k!),

and by the modified Lentz continued fraction

    E1(x) = e^{-x} / (x + 1 - 1/(x + 3 - 4/(x + 5 - 9/(...))))

above.  Both branches agree to better than 1e-14 at the seam; relative
error stays below 1e-13 on [1e-8, 700].  For x > 700 the unscaled value
underflows and ``exp_integral_e1`` returns exactly 0.
"""

import math

import numpy as np

from . import backends
from .backends import EULER_GAMMA

__all__ = [
    "EULER_GAMMA",
    "exp_integral_e1",
    "exp_integral_e1_scaled",
    "e1_upper_exponential",
    "e1_upper_log",
    "gamma_fn",
    "unit_sphere_area",
]

# max_{tau>0} (e tau + 2) e^{-tau} = e^{2/e}, the constant of the
# logarithmic envelope of E1(2t).
LOG_ENVELOPE_CONSTANT = math.exp(2.0 / math.e) / 2.0


def _as_positive_array(x, name):
    arr = np.asarray(x, dtype=np.float64)
    if arr.ndim == 0:
        arr = arr[None]
    if not np.all(np.isfinite(arr)) or np.any(arr <= 0.0):
        raise ValueError(f"{name} must be strictly positive and finite")
    return arr


def _match(x, values):
    if np.ndim(x) == 0:
        return float(values[0])
    return values


def exp_integral_e1(x):
    """Exponential integral E1(x) = int_x^inf e^{-rho}/rho drho for x > 0."""
    arr = _as_positive_array(x, "x")
    return _match(x, backends.e1(np.ascontiguousarray(arr.ravel())).reshape(arr.shape))


def exp_integral_e1_scaled(x):
    """Scaled exponential integral e^x E1(x).

    Stable for arbitrarily large x (no overflow/underflow); used wherever
    E1 appears multiplied by a compensating exponential.
    """
    arr = _as_positive_array(x, "x")
    return _match(
        x, backends.e1_scaled(np.ascontiguousarray(arr.ravel())).reshape(arr.shape)
    )


def e1_upper_exponential(t):
    """Exponential envelope e^{-2t}/(2t), an upper bound for E1(2t)."""
    arr = _as_positive_array(t, "t")
    return _match(t, np.exp(-2.0 * arr) / (2.0 * arr))


def e1_upper_log(t):
    """Logarithmic envelope (e^{2/e}/2) log(e + 1/t), an upper bound for E1(2t)."""
    arr = _as_positive_array(t, "t")
    return _match(t, LOG_ENVELOPE_CONSTANT * np.log(math.e + 1.0 / arr))


# Lanczos approximation, g = 7 with 9 coefficients.  Relative error stays
# below 3e-14 on (0, 50] once arguments under 0.5 are lifted through the
# recurrence Gamma(a) = Gamma(a + 1)/a.
_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def _gamma_lanczos(a):
    z = a - 1.0
    x = _LANCZOS_COEF[0]
    for i in range(1, 9):
        x += _LANCZOS_COEF[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return math.sqrt(2.0 * math.pi) * t ** (z + 0.5) * math.exp(-t) * x


def gamma_fn(a):
    """Gamma function for real a > 0."""
    a = float(a)
    if not math.isfinite(a) or a <= 0.0:
        raise ValueError("a must be strictly positive and finite")
    if a < 0.5:
        return _gamma_lanczos(a + 1.0) / a
    return _gamma_lanczos(a)


def unit_sphere_area(n):
    """Surface area of the unit sphere in R^n: 2 pi^{n/2} / Gamma(n/2)."""
    n = int(n)
    if n < 1:
        raise ValueError("n must be an integer >= 1")
    return 2.0 * math.pi ** (n / 2.0) / gamma_fn(n / 2.0)
