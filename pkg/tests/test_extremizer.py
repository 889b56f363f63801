import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import quad

from heatnorm.curve import FLOOR_T_MAX, exact_m, floor_lb
from heatnorm.extremizer import (
    build_report,
    floor_lambda,
    h1_norm_sq,
    heat_at_origin,
    optimize_lambda,
    ratio,
    saturating_profile_ratio,
)


def test_h1_norm_sq_values():
    # 2 pi (log lam + (1 - lam^-2)/2)
    assert h1_norm_sq(math.e) == pytest.approx(8.999609629181743, rel=1e-14)
    assert h1_norm_sq(1.0 + 1e-9) < 1e-7  # annulus collapses
    # stays below the coarse 4 pi log(lam) estimate it refines
    assert h1_norm_sq(10.0) == pytest.approx(17.577745551884824, rel=1e-14)
    assert h1_norm_sq(10.0) <= 4.0 * math.pi * math.log(10.0)
    with pytest.raises(ValueError):
        h1_norm_sq(1.0)
    with pytest.raises(ValueError):
        h1_norm_sq(0.5)


def test_h1_norm_sq_quadrature_oracle():
    rng = np.random.default_rng(21)
    for _ in range(200):
        lam = float(1.0 + 10.0 ** rng.uniform(-3, 2))
        ref, _ = quad(lambda r: 2 * math.pi * (1 + r * r) * r**-3, 1.0, lam,
                      epsabs=1e-13, epsrel=1e-13)
        assert h1_norm_sq(lam) == pytest.approx(ref, rel=1e-11)


def test_heat_at_origin_values():
    # frozen quadrature of int_1^2 e^{-r^2/2}/r dr
    assert heat_at_origin(0.5, 2.0) == pytest.approx(0.25543654203404986, rel=1e-12)
    # t -> 0 at fixed lam tends to log(lam)
    assert heat_at_origin(1e-12, 3.0) == pytest.approx(math.log(3.0), rel=1e-10)
    # dominates the crude e^{-t lam^2} log(lam) estimate
    assert heat_at_origin(0.1, 3.0) >= math.exp(-0.9) * math.log(3.0)


def test_heat_at_origin_quadrature_oracle():
    rng = np.random.default_rng(22)
    for _ in range(200):
        t = float(10.0 ** rng.uniform(-4, 0.5))
        lam = float(1.0 + 10.0 ** rng.uniform(-2, 1.5))
        ref, _ = quad(lambda r: math.exp(-t * r * r) / r, 1.0, lam,
                      epsabs=1e-15, epsrel=1e-13)
        assert heat_at_origin(t, lam) == pytest.approx(ref, rel=1e-11, abs=1e-15)


def test_floor_lambda():
    assert floor_lambda(0.01) == pytest.approx(math.sqrt(math.e + 100.0), rel=1e-15)
    near_cutoff = floor_lambda(FLOOR_T_MAX * (1 - 1e-12))
    assert near_cutoff == pytest.approx(math.sqrt(2.0 * math.e), rel=1e-9)
    with pytest.raises(ValueError):
        floor_lambda(FLOOR_T_MAX)
    with pytest.raises(ValueError):
        floor_lambda(0.0)


@settings(max_examples=100, deadline=None)
@given(st.floats(min_value=1e-9, max_value=FLOOR_T_MAX * 0.999999))
def test_floor_lambda_keeps_exponent_small(t):
    lam = floor_lambda(t)
    assert t * lam * lam == pytest.approx(math.e * t + 1.0, rel=1e-12)
    assert t * lam * lam < 2.0


def test_ratio_sandwich():
    t = 0.05
    r = ratio(t, floor_lambda(t))
    assert floor_lb(t) <= r <= exact_m(t)


def test_ratio_rejects_degenerate_annulus():
    with pytest.raises(ValueError):
        ratio(0.5, 1.0 + 1e-9)
    with pytest.raises(ValueError):
        ratio(0.5, 1.0)


def test_ratio_small_annulus_taylor():
    # ratio(t, 1+eps) = e^{-t} sqrt(eps/(4 pi)) (1 + O(eps))
    t, eps = 0.7, 1e-5
    expected = math.exp(-t) * math.sqrt(eps / (4.0 * math.pi))
    assert ratio(t, 1.0 + eps) == pytest.approx(expected, rel=10 * eps)


def test_ratio_certifies_floor_at_tiny_t():
    t = 1e-6
    assert ratio(t, floor_lambda(t)) >= floor_lb(t)


def test_two_sided_certificate_grid():
    ts = np.geomspace(1e-8, FLOOR_T_MAX, 100, endpoint=False)
    for t in ts:
        r = ratio(float(t), floor_lambda(float(t)))
        assert floor_lb(float(t)) <= r <= exact_m(float(t)) + 1e-12


def test_optimizer_beats_fixed_choice():
    for t in (1e-6, 0.01, 0.3):
        report = optimize_lambda(t)
        assert report.is_optimized
        assert report.ratio >= ratio(t, floor_lambda(t))
        assert report.ratio <= exact_m(t) + 1e-12


@pytest.mark.parametrize("t", [1e-6, 1e-3, 1.0, 10.0])
def test_optimizer_stays_below_norm(t):
    report = optimize_lambda(t)
    assert 0.0 < report.ratio <= exact_m(t)


def test_ratio_unimodal_in_lambda():
    t = 0.01
    lams = np.geomspace(1.001, 1000.0, 100)
    vals = np.array([ratio(t, l) for l in lams])
    interior_maxima = 0
    for i in range(1, len(vals) - 1):
        if vals[i] > vals[i - 1] and vals[i] > vals[i + 1]:
            interior_maxima += 1
    assert interior_maxima == 1


def test_build_report_fields():
    rep = build_report(0.05, 3.0)
    assert rep.h1_norm == pytest.approx(math.sqrt(h1_norm_sq(3.0)), rel=1e-15)
    assert rep.ratio == pytest.approx(rep.heat_at_origin / rep.h1_norm, rel=1e-15)
    assert rep.floor_lb == pytest.approx(floor_lb(0.05), rel=1e-15)
    assert not rep.is_optimized
    rep_large_t = build_report(2.0, 3.0)
    assert rep_large_t.floor_lb is None


@pytest.mark.parametrize("t", [0.5, 2.0])
def test_saturating_profile_matches_exact_norm(t):
    assert saturating_profile_ratio(t) == pytest.approx(exact_m(t), rel=1e-10)


def test_saturating_identity_algebra():
    # (e^{2t}/2) E1(2t) / sqrt(pi e^{2t} E1(2t)) == (e^t / 2 sqrt(pi)) sqrt(E1(2t))
    from heatnorm.specfun import exp_integral_e1

    t = 0.3
    num = math.exp(2 * t) / 2.0 * exp_integral_e1(2 * t)
    den = math.sqrt(math.pi * math.exp(2 * t) * exp_integral_e1(2 * t))
    assert num / den == pytest.approx(exact_m(t), rel=1e-14)
