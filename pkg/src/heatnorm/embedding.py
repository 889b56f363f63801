"""The general (n, q, s) smoothing coefficient and its critical-case bound.

For n >= 1, 1 <= q <= 2 and real s the heat semigroup maps H^{s,q}(R^n)
into L^inf(R^n) with coefficient

    K(n, q, s, t) = { omega_{n-1} / (2 pi)^n *
                      int_0^inf r^(n-1) e^{-q t r^2} (1 + r^2)^(-sq/2) dr }^(1/q).

At the critical regularity s = n/q the coefficient is dominated by the
closed-form logarithmic bound

    [ 2 log(e + 1/t) / ((4 pi)^(n/2) Gamma(n/2)) *
      { 1/sqrt(e) + (1/n) (e/(2q))^(n/2) } ]^(1/q),

whose proof splits the radial integral at r = sqrt(a), a = e/(2q): a tail
piece bounded by E1(aqt)/2 and a head piece bounded by a^(n/2)/n.
"""

import math
from dataclasses import dataclass

from .quadrature import DEFAULT_CONFIG, radial_kernel_integral
from .specfun import exp_integral_e1, gamma_fn, unit_sphere_area

__all__ = [
    "EmbeddingParams",
    "kernel_norm",
    "gaussian_moment_norm",
    "critical_log_bound",
    "critical_split_terms",
    "split_radius_parameter",
]


@dataclass(frozen=True)
class EmbeddingParams:
    """Dimension n >= 1, integrability 1 <= q <= 2, regularity s (any real)."""

    n: int
    q: float
    s: float

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise ValueError("n must be an integer >= 1")
        if not 1.0 <= self.q <= 2.0:
            raise ValueError("q must lie in [1, 2]")
        if not math.isfinite(self.s):
            raise ValueError("s must be finite")


def _check_t(t):
    t = float(t)
    if not math.isfinite(t) or t <= 0.0:
        raise ValueError("t must be strictly positive and finite")
    return t


def kernel_norm(params, t, config=DEFAULT_CONFIG):
    """Smoothing coefficient K(n, q, s, t) by adaptive quadrature."""
    if not isinstance(params, EmbeddingParams):
        params = EmbeddingParams(*params)
    t = _check_t(t)
    n, q, s = params.n, params.q, params.s
    integral, _ = radial_kernel_integral(n, q * t, s * q / 2.0, config)
    coeff = unit_sphere_area(n) / (2.0 * math.pi) ** n
    return float((coeff * integral) ** (1.0 / q))


def gaussian_moment_norm(n, q, t):
    """Closed form of K(n, q, 0, t): the integrand is a pure Gaussian moment.

    With u = q t r^2 the radial integral is Gamma(n/2) (qt)^(-n/2) / 2, and
    the whole coefficient collapses to (4 pi q t)^(-n/(2q)).
    """
    params = EmbeddingParams(n, q, 0.0)
    t = _check_t(t)
    return (4.0 * math.pi * params.q * t) ** (-params.n / (2.0 * params.q))


def critical_log_bound(n, q, t):
    """Closed-form bound dominating K(n, q, n/q, t) for all t > 0."""
    params = EmbeddingParams(n, q, n / q)
    t = _check_t(t)
    n, q = params.n, params.q
    brace = 1.0 / math.sqrt(math.e) + (math.e / (2.0 * q)) ** (n / 2.0) / n
    lead = 2.0 * math.log(math.e + 1.0 / t) / ((4.0 * math.pi) ** (n / 2.0) * gamma_fn(n / 2.0))
    return (lead * brace) ** (1.0 / q)


def split_radius_parameter(q):
    """The split point a = e/(2q) used by the critical-case proof."""
    if not 1.0 <= q <= 2.0:
        raise ValueError("q must lie in [1, 2]")
    return math.e / (2.0 * q)


def critical_split_terms(n, q, t):
    """The two pieces bounding the raw critical radial integral.

    Returns ``(tail, head)`` with tail = E1(a q t)/2 bounding the integral
    over r > sqrt(a) and head = a^(n/2)/n bounding the integral over
    r < sqrt(a), where a = e/(2q).  Their sum dominates
    int_0^inf r^(n-1) e^{-q t r^2} (1+r^2)^(-n/2) dr.
    """
    params = EmbeddingParams(n, q, n / q)
    t = _check_t(t)
    a = split_radius_parameter(params.q)
    tail = 0.5 * exp_integral_e1(a * params.q * t)
    head = a ** (params.n / 2.0) / params.n
    return tail, head
