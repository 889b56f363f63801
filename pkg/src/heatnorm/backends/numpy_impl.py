"""Pure-numpy implementations of the hot numerical kernels.

Every function here has a signature-compatible twin in
:mod:`heatnorm.backends.numba_impl`; which pair is active is decided once at
import time by :mod:`heatnorm.backends`.  Inputs are assumed validated
(positive, finite) by the public wrappers in :mod:`heatnorm.specfun` and
:mod:`heatnorm.quadrature`.
"""

import numpy as np

EULER_GAMMA = 0.57721566490153286061

# Exponential-integral branch seam: power series below, continued fraction
# above.  Both deliver < 1e-14 relative error at the seam.
SERIES_CUTOFF = 1.0
UNDERFLOW_CUTOFF = 700.0

_SERIES_TERMS = 40
_CF_MAX_ITER = 200
_CF_EPS = 1e-16
_TINY = 1e-300


def _e1_series(x):
    """E1 on 0 < x <= 1 via -gamma - log x - sum_{k>=1} (-x)^k / (k k!)."""
    acc = np.zeros_like(x)
    u = np.ones_like(x)
    for k in range(1, _SERIES_TERMS + 1):
        u = u * (-x) / k
        acc -= u / k
    return -EULER_GAMMA - np.log(x) + acc


def _e1_cf_scaled(x):
    """e^x E1(x) on x > 1 via the modified Lentz continued fraction.

    E1(x) = e^{-x} / (x + 1 - 1/(x + 3 - 4/(x + 5 - 9/(...)))).
    """
    b = x + 1.0
    c = np.full_like(x, 1.0 / _TINY)
    d = 1.0 / b
    h = d.copy()
    for i in range(1, _CF_MAX_ITER + 1):
        a = -float(i * i)
        b = b + 2.0
        d = a * d + b
        np.copyto(d, _TINY, where=np.abs(d) < _TINY)
        d = 1.0 / d
        c = b + a / c
        np.copyto(c, _TINY, where=np.abs(c) < _TINY)
        delta = c * d
        h *= delta
        if np.all(np.abs(delta - 1.0) < _CF_EPS):
            break
    return h


def e1(x):
    """Exponential integral E1 for an array of positive abscissae.

    Returns exactly 0.0 where e^{-x}/x underflows (x > 700).
    """
    out = np.zeros_like(x)
    small = x <= SERIES_CUTOFF
    if np.any(small):
        out[small] = _e1_series(x[small])
    mid = (~small) & (x <= UNDERFLOW_CUTOFF)
    if np.any(mid):
        out[mid] = np.exp(-x[mid]) * _e1_cf_scaled(x[mid])
    return out


def e1_scaled(x):
    """Scaled exponential integral e^x E1(x), overflow-free for any x > 0."""
    out = np.empty_like(x)
    small = x <= SERIES_CUTOFF
    if np.any(small):
        out[small] = np.exp(x[small]) * _e1_series(x[small])
    if np.any(~small):
        out[~small] = _e1_cf_scaled(x[~small])
    return out


# Gauss 7 / Kronrod 15 pair (QUADPACK qk15 constants), full 15-node layout.
GK_NODES = np.array([
    -0.991455371120812639206854697526329,
    -0.949107912342758524526189684047851,
    -0.864864423359769072789712788640926,
    -0.741531185599394439863864773280788,
    -0.586087235467691130294144838258730,
    -0.405845151377397166906606412076961,
    -0.207784955007898467600689403773245,
    0.0,
    0.207784955007898467600689403773245,
    0.405845151377397166906606412076961,
    0.586087235467691130294144838258730,
    0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,
    0.949107912342758524526189684047851,
    0.991455371120812639206854697526329,
])
GK_WEIGHTS_K = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
    0.204432940075298892414161999234649,
    0.190350578064785409913256402421014,
    0.169004726639267902826583426598550,
    0.140653259715525918745189590510238,
    0.104790010322250183839876322541518,
    0.063092092629978553290700663189204,
    0.022935322010529224963732008058970,
])
GK_WEIGHTS_G = np.array([
    0.0,
    0.129484966168869693270611432679082,
    0.0,
    0.279705391489276667901467771423780,
    0.0,
    0.381830050505118944950369775488975,
    0.0,
    0.417959183673469387755102040816327,
    0.0,
    0.381830050505118944950369775488975,
    0.0,
    0.279705391489276667901467771423780,
    0.0,
    0.129484966168869693270611432679082,
    0.0,
])


def gk15_radial(a, b, n, c, p):
    """Gauss-Kronrod 15 on a batch of panels of the radial kernel integrand.

    Integrand: r^(n-1) exp(-c r^2) (1 + r^2)^(-p).  Returns the K15 panel
    values and |K15 - G7| error indicators, one per panel.
    """
    half = 0.5 * (b - a)[:, None]
    mid = 0.5 * (a + b)[:, None]
    r = mid + half * GK_NODES[None, :]
    f = r ** (n - 1) * np.exp(-c * r * r) * (1.0 + r * r) ** (-p)
    vals = (f * GK_WEIGHTS_K[None, :]).sum(axis=1) * half[:, 0]
    gauss = (f * GK_WEIGHTS_G[None, :]).sum(axis=1) * half[:, 0]
    return vals, np.abs(vals - gauss)
