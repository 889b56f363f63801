"""Numba-compiled implementations of the hot numerical kernels.

Scalar inner loops under ``@njit``; same contracts as
:mod:`heatnorm.backends.numpy_impl`.  Importing this module requires numba.
"""

import numpy as np
from numba import njit

from .numpy_impl import (
    EULER_GAMMA,
    GK_NODES,
    GK_WEIGHTS_G,
    GK_WEIGHTS_K,
    SERIES_CUTOFF,
    UNDERFLOW_CUTOFF,
)

_CF_MAX_ITER = 200
_CF_EPS = 1e-16
_TINY = 1e-300


@njit(cache=True)
def _e1_series_scalar(x):
    acc = 0.0
    u = 1.0
    for k in range(1, 41):
        u = u * (-x) / k
        acc -= u / k
        if abs(u) < 1e-18:
            break
    return -EULER_GAMMA - np.log(x) + acc


@njit(cache=True)
def _e1_cf_scaled_scalar(x):
    b = x + 1.0
    c = 1.0 / _TINY
    d = 1.0 / b
    h = d
    for i in range(1, _CF_MAX_ITER + 1):
        a = -float(i * i)
        b += 2.0
        d = a * d + b
        if abs(d) < _TINY:
            d = _TINY
        d = 1.0 / d
        c = b + a / c
        if abs(c) < _TINY:
            c = _TINY
        delta = c * d
        h *= delta
        if abs(delta - 1.0) < _CF_EPS:
            break
    return h


@njit(cache=True)
def e1(x):
    out = np.empty_like(x)
    for i in range(x.shape[0]):
        xi = x[i]
        if xi <= SERIES_CUTOFF:
            out[i] = _e1_series_scalar(xi)
        elif xi <= UNDERFLOW_CUTOFF:
            out[i] = np.exp(-xi) * _e1_cf_scaled_scalar(xi)
        else:
            out[i] = 0.0
    return out


@njit(cache=True)
def e1_scaled(x):
    out = np.empty_like(x)
    for i in range(x.shape[0]):
        xi = x[i]
        if xi <= SERIES_CUTOFF:
            out[i] = np.exp(xi) * _e1_series_scalar(xi)
        else:
            out[i] = _e1_cf_scaled_scalar(xi)
    return out


@njit(cache=True)
def gk15_radial(a, b, n, c, p):
    m = a.shape[0]
    vals = np.empty(m)
    errs = np.empty(m)
    for j in range(m):
        half = 0.5 * (b[j] - a[j])
        mid = 0.5 * (a[j] + b[j])
        acc_k = 0.0
        acc_g = 0.0
        for i in range(15):
            r = mid + half * GK_NODES[i]
            f = r ** (n - 1) * np.exp(-c * r * r) * (1.0 + r * r) ** (-p)
            acc_k += GK_WEIGHTS_K[i] * f
            acc_g += GK_WEIGHTS_G[i] * f
        vals[j] = acc_k * half
        errs[j] = abs((acc_k - acc_g) * half)
    return vals, errs
