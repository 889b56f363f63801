import math

import numpy as np
import pytest
from scipy.integrate import quad
from scipy.special import gamma as scipy_gamma

from heatnorm.exceptions import QuadratureError
from heatnorm.quadrature import (
    QuadratureConfig,
    radial_kernel_integral,
    tail_bound,
)


def reference(n, c, p):
    val, _ = quad(
        lambda r: r ** (n - 1) * math.exp(-c * r * r) * (1.0 + r * r) ** (-p),
        0.0,
        np.inf,
        epsabs=1e-14,
        epsrel=1e-12,
        limit=400,
    )
    return val


def test_config_validation():
    with pytest.raises(ValueError):
        QuadratureConfig(abs_tol=0.0)
    with pytest.raises(ValueError):
        QuadratureConfig(rel_tol=-1e-9)
    with pytest.raises(ValueError):
        QuadratureConfig(max_subdivisions=5)
    with pytest.raises(ValueError):
        QuadratureConfig(truncation_radius=0.0)


def test_gaussian_moment_closed_form():
    rng = np.random.default_rng(11)
    for _ in range(30):
        n = int(rng.integers(1, 7))
        c = float(10.0 ** rng.uniform(-4, 2))
        value, err = radial_kernel_integral(n, c, 0.0)
        exact = 0.5 * scipy_gamma(n / 2.0) * c ** (-n / 2.0)
        assert value == pytest.approx(exact, rel=1e-11)
        assert abs(value - exact) <= max(err, 1e-13 * exact)


@pytest.mark.parametrize(
    "n,c,p",
    [
        (2, 1.0, 1.0),
        (2, 2e-4, 1.0),
        (1, 0.5, 0.25),
        (3, 0.015, 2.25),
        (4, 3.0, -1.0),
        (1, 1.0, -2.0),
        (6, 0.1, 3.0),
    ],
)
def test_matches_scipy_reference(n, c, p):
    value, err = radial_kernel_integral(n, c, p)
    ref = reference(n, c, p)
    assert value == pytest.approx(ref, rel=5e-11)


def test_reported_error_is_honest():
    for (n, c, p) in [(2, 0.002, 1.0), (3, 0.4, 1.5), (1, 5.0, 0.5)]:
        value, err = radial_kernel_integral(n, c, p)
        ref = reference(n, c, p)
        assert abs(value - ref) <= err + 1e-12 * abs(ref)


def test_tail_bound_dominates_true_tail():
    for (n, c, p, radius) in [(2, 0.5, 1.0, 4.0), (3, 0.1, -1.0, 12.0), (1, 2.0, 0.5, 3.0)]:
        true_tail, _ = quad(
            lambda r: r ** (n - 1) * math.exp(-c * r * r) * (1.0 + r * r) ** (-p),
            radius,
            np.inf,
            epsabs=1e-16,
            epsrel=1e-10,
        )
        assert tail_bound(radius, n, c, p) >= true_tail


def test_tail_bound_rejects_small_radius():
    with pytest.raises(ValueError):
        tail_bound(0.5, 2, 1.0, 1.0)


def test_fixed_truncation_radius():
    cfg = QuadratureConfig(truncation_radius=40.0)
    value, _ = radial_kernel_integral(2, 1.0, 1.0, cfg)
    assert value == pytest.approx(reference(2, 1.0, 1.0), rel=1e-10)


def test_subdivision_budget_exhaustion():
    cfg = QuadratureConfig(rel_tol=1e-13, abs_tol=1e-16, max_subdivisions=10)
    with pytest.raises(QuadratureError):
        radial_kernel_integral(2, 2e-6, 1.0, cfg)


def test_input_validation():
    with pytest.raises(ValueError):
        radial_kernel_integral(0, 1.0, 1.0)
    with pytest.raises(ValueError):
        radial_kernel_integral(2, -1.0, 1.0)
    with pytest.raises(ValueError):
        radial_kernel_integral(2, math.nan, 1.0)
