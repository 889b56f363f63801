"""Adaptive Gauss-Kronrod integration of the radial kernel family.

Everything the package integrates numerically reduces to

    I(n, c, p) = int_0^inf r^(n-1) exp(-c r^2) (1 + r^2)^(-p) dr

with dimension n >= 1, Gaussian decay c > 0 and a real (possibly negative)
power p.  The integral is truncated at a radius R where an analytic
Gaussian tail bound certifies the remainder is negligible, then [0, R] is
integrated by globally adaptive bisection with a G7/K15 pair.  Panel sums
run through the active kernel backend (numba or numpy).
"""

from dataclasses import dataclass

import numpy as np

from . import backends
from .exceptions import QuadratureError

__all__ = ["QuadratureConfig", "radial_kernel_integral", "tail_bound"]


@dataclass(frozen=True)
class QuadratureConfig:
    """Tolerances and limits for the adaptive integrator.

    ``truncation_radius``: ``None`` selects the automatic tail policy;
    a positive float pins R (the certified tail bound is still added to
    the error budget).
    """

    abs_tol: float = 1e-14
    rel_tol: float = 1e-11
    max_subdivisions: int = 2000
    truncation_radius: float | None = None

    def __post_init__(self):
        if not (self.abs_tol > 0.0 and self.rel_tol > 0.0):
            raise ValueError("tolerances must be strictly positive")
        if self.max_subdivisions < 10:
            raise ValueError("max_subdivisions must be at least 10")
        if self.truncation_radius is not None and not self.truncation_radius > 0.0:
            raise ValueError("truncation_radius must be positive when fixed")


DEFAULT_CONFIG = QuadratureConfig()


def tail_bound(radius, n, c, p):
    """Upper bound for int_R^inf of the radial kernel integrand.

    Uses (1+r^2)^(-p) <= 2^max(-p,0) r^(-2p) for r >= 1 and the Gaussian
    bound int_R^inf r^m e^{-c r^2} dr <= R^(m-1) e^{-c R^2} / c, valid once
    r^m e^{-c r^2 / 2} is decreasing past R (guaranteed by R^2 >= m/c).
    """
    m = n - 1.0 - 2.0 * p
    if radius < 1.0 or c * radius * radius < max(m, 0.0) * (1.0 - 1e-12):
        raise ValueError("radius too small for the analytic tail bound")
    prefactor = 2.0 ** max(-p, 0.0)
    return prefactor * radius ** (m - 1.0) * np.exp(-c * radius * radius) / c


def _auto_radius(n, c, p, abs_target):
    m = n - 1.0 - 2.0 * p
    radius = max(2.0, np.sqrt(max(m, 1.0) / c))
    for _ in range(400):
        if tail_bound(radius, n, c, p) < abs_target:
            return radius
        radius *= 1.25
    raise QuadratureError("could not find a truncation radius for the tail target")


def radial_kernel_integral(n, c, p, config=DEFAULT_CONFIG):
    """Integrate r^(n-1) exp(-c r^2) (1+r^2)^(-p) over (0, inf).

    Returns ``(value, error_bound)`` where ``error_bound`` sums the
    adaptive error indicators and the certified tail bound.  Raises
    ``QuadratureError`` if the panel budget is exhausted before the
    tolerance max(abs_tol, rel_tol * |value|) is met.
    """
    n = int(n)
    if n < 1:
        raise ValueError("n must be an integer >= 1")
    if not (np.isfinite(c) and c > 0.0):
        raise ValueError("Gaussian decay c must be strictly positive")
    p = float(p)

    if config.truncation_radius is None:
        radius = _auto_radius(n, c, p, config.abs_tol / 10.0)
    else:
        radius = float(config.truncation_radius)
    tail = tail_bound(radius, n, c, p)

    total, err_sum = _adaptive_on_interval(0.0, radius, n, c, p, config)

    # The automatic radius targets abs_tol; when the result is large the
    # relative criterion may allow a smaller R, when tiny it may demand a
    # larger one.  Extend outward until the tail fits the final budget.
    for _ in range(60):
        if tail <= max(config.abs_tol, config.rel_tol * abs(total)) / 10.0:
            return float(total), float(err_sum + tail)
        new_radius = radius * 2.0
        ext, ext_err = _adaptive_on_interval(radius, new_radius, n, c, p, config)
        total += ext
        err_sum += ext_err
        radius = new_radius
        tail = tail_bound(radius, n, c, p)
    raise QuadratureError("tail extension did not reach the error budget")


def _adaptive_on_interval(a, b, n, c, p, config):
    lo = [a]
    hi = [b]
    vals, errs = backends.gk15_radial(np.array(lo), np.array(hi), n, c, p)
    vals = list(vals)
    errs = list(errs)

    while True:
        total = sum(vals)
        err_sum = sum(errs)
        tol = max(config.abs_tol, config.rel_tol * abs(total))
        if err_sum <= 0.5 * tol:
            return total, err_sum
        if len(lo) >= config.max_subdivisions:
            raise QuadratureError(
                f"no convergence within {config.max_subdivisions} subdivisions "
                f"(error {err_sum:.3e}, tolerance {tol:.3e})"
            )
        # Bisect every panel within a quarter of the worst error indicator;
        # this always selects at least the worst panel.
        threshold = 0.25 * max(errs)
        keep_lo, keep_hi, keep_vals, keep_errs = [], [], [], []
        new_lo, new_hi = [], []
        for left, right, v, e in zip(lo, hi, vals, errs):
            if e >= threshold:
                mid = 0.5 * (left + right)
                new_lo += [left, mid]
                new_hi += [mid, right]
            else:
                keep_lo.append(left)
                keep_hi.append(right)
                keep_vals.append(v)
                keep_errs.append(e)
        refined, refined_err = backends.gk15_radial(
            np.array(new_lo), np.array(new_hi), n, c, p
        )
        lo = keep_lo + new_lo
        hi = keep_hi + new_hi
        vals = keep_vals + list(refined)
        errs = keep_errs + list(refined_err)
