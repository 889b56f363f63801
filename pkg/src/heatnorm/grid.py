"""Discrete 2-D spectral harness on a periodic grid.

The grid discretizes R^2 by a periodic box [-L/2, L/2)^2 with N points per
axis and carries the symmetric Fourier convention in which BOTH transforms
have a 1/(2 pi) prefactor:

    (F f)(xi)    = (1/2pi) int e^{-i x.xi} f(x) dx,
    (F^-1 F)(x)  = (1/2pi) int e^{+i x.xi} F(xi) dxi.

Every constant in the continuum theory depends on this normalization, so
the discrete weights (spacing^2 forward, (2 pi / L)^2 inverse) are locked
in by an exact discrete Plancherel identity.  Heat flow acts as the
multiplier e^{-t |xi|^2} on the spectral side; Sobolev norms are spectral
quadratures of (1 + |xi|^2)^s.

All fields are immutable value objects; operations return new fields.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .curve import exact_m
from .exceptions import VerificationError

__all__ = [
    "SpectralGrid",
    "GridField",
    "to_spectral",
    "to_physical",
    "heat_apply",
    "sobolev_norm",
    "sup_norm",
    "l2_norm",
    "convolve",
    "ratio_check",
    "RatioReport",
    "random_band_limited",
    "gaussian_profile",
    "saturating_profile",
    "annular_profile",
    "decomposition_residual",
    "plancherel_error",
    "semigroup_error",
]

PHYSICAL = "physical"
SPECTRAL = "spectral"


@dataclass(frozen=True)
class SpectralGrid:
    """Periodic N x N grid over [-L/2, L/2)^2 with centered frequencies."""

    points_per_axis: int
    domain_length: float

    def __post_init__(self):
        n = self.points_per_axis
        if n < 8 or (n & (n - 1)) != 0:
            raise ValueError("points_per_axis must be a power of two >= 8")
        if not self.domain_length > 0.0:
            raise ValueError("domain_length must be positive")

    @property
    def spacing(self):
        return self.domain_length / self.points_per_axis

    @property
    def freq_spacing(self):
        return 2.0 * math.pi / self.domain_length

    @property
    def nyquist(self):
        return math.pi * self.points_per_axis / self.domain_length

    def axis_coords(self):
        """Physical sample positions along one axis."""
        n = self.points_per_axis
        return -0.5 * self.domain_length + self.spacing * np.arange(n)

    def axis_freqs(self):
        """Frequencies 2 pi k / L along one axis, in FFT storage order."""
        n = self.points_per_axis
        return self.freq_spacing * np.fft.fftfreq(n, d=1.0 / n)

    def freq_sq(self):
        """|xi|^2 on the full frequency grid (FFT order)."""
        xi = self.axis_freqs()
        return xi[:, None] ** 2 + xi[None, :] ** 2

    def _phase(self):
        # e^{i xi_k L / 2} = (-1)^k per axis: converts FFTs over [0, L) to
        # transforms over the centered box.
        k = np.fft.fftfreq(self.points_per_axis, d=1.0 / self.points_per_axis)
        sign = (-1.0) ** np.abs(k)
        return sign[:, None] * sign[None, :]


@dataclass(frozen=True)
class GridField:
    """Complex samples on a grid, tagged physical or spectral."""

    grid: SpectralGrid
    values: np.ndarray = field(repr=False)
    representation: str = PHYSICAL

    def __post_init__(self):
        n = self.grid.points_per_axis
        if self.values.shape != (n, n):
            raise ValueError(f"values must have shape ({n}, {n})")
        if self.representation not in (PHYSICAL, SPECTRAL):
            raise ValueError("representation must be 'physical' or 'spectral'")
        self.values.setflags(write=False)


def _require(fieldobj, representation):
    if fieldobj.representation != representation:
        raise ValueError(f"field must be in {representation} representation")


def to_spectral(fieldobj):
    """Forward transform under the symmetric 1/(2 pi) convention."""
    _require(fieldobj, PHYSICAL)
    g = fieldobj.grid
    coeff = g.spacing**2 / (2.0 * math.pi)
    values = coeff * g._phase() * np.fft.fft2(fieldobj.values)
    return GridField(g, values, SPECTRAL)


def to_physical(fieldobj):
    """Inverse transform; exact round trip with :func:`to_spectral`."""
    _require(fieldobj, SPECTRAL)
    g = fieldobj.grid
    n = g.points_per_axis
    coeff = 2.0 * math.pi * n**2 / g.domain_length**2
    values = coeff * np.fft.ifft2(g._phase() * fieldobj.values)
    return GridField(g, values, PHYSICAL)


def _spectral_of(fieldobj):
    return fieldobj if fieldobj.representation == SPECTRAL else to_spectral(fieldobj)


def heat_apply(fieldobj, t):
    """Apply e^{t Delta} as the spectral multiplier e^{-t |xi|^2}, t >= 0.

    Returns a field in the same representation as the input.
    """
    t = float(t)
    if t < 0.0 or not math.isfinite(t):
        raise ValueError("heat flow requires t >= 0")
    spec = _spectral_of(fieldobj)
    out = GridField(spec.grid, np.exp(-t * spec.grid.freq_sq()) * spec.values, SPECTRAL)
    if fieldobj.representation == PHYSICAL:
        return to_physical(out)
    return out


def sobolev_norm(fieldobj, s):
    """Discrete H^s norm: sqrt of the spectral quadrature of (1+|xi|^2)^s |F|^2."""
    s = float(s)
    if s < 0.0 or not math.isfinite(s):
        raise ValueError("s must be a finite real >= 0")
    spec = _spectral_of(fieldobj)
    g = spec.grid
    weight = (1.0 + g.freq_sq()) ** s
    return math.sqrt(g.freq_spacing**2 * float(np.sum(weight * np.abs(spec.values) ** 2)))


def l2_norm(fieldobj):
    """Discrete L^2 norm (physical quadrature or spectral, identically)."""
    g = fieldobj.grid
    if fieldobj.representation == PHYSICAL:
        return math.sqrt(g.spacing**2 * float(np.sum(np.abs(fieldobj.values) ** 2)))
    return math.sqrt(g.freq_spacing**2 * float(np.sum(np.abs(fieldobj.values) ** 2)))


def sup_norm(fieldobj):
    """Grid maximum of |f|; a lower bound for the continuum sup norm."""
    _require(fieldobj, PHYSICAL)
    return float(np.max(np.abs(fieldobj.values)))


def convolve(field_a, field_b):
    """Discrete convolution of two physical fields with quadrature weight.

    Approximates (f * g)(x) = int f(y) g(x - y) dy by the periodic sum
    spacing^2 sum_j f(x_j) g(x - x_j); the half-period roll accounts for
    the centered coordinate box.
    """
    _require(field_a, PHYSICAL)
    _require(field_b, PHYSICAL)
    if field_a.grid != field_b.grid:
        raise ValueError("fields must share a grid")
    g = field_a.grid
    n = g.points_per_axis
    raw = np.fft.ifft2(np.fft.fft2(field_a.values) * np.fft.fft2(field_b.values))
    values = g.spacing**2 * np.roll(raw, (n // 2, n // 2), axis=(0, 1))
    return GridField(g, values, PHYSICAL)


def random_band_limited(seed, grid, max_freq):
    """Deterministic spectral field with i.i.d. complex Gaussian modes.

    The spectrum is exactly zero outside |xi| <= max_freq; max_freq may not
    exceed half the Nyquist frequency, which keeps the heat multiplier and
    the norm quadratures alias-free.
    """
    if max_freq > 0.5 * grid.nyquist:
        raise ValueError("max_freq must not exceed half the Nyquist frequency")
    rng = np.random.default_rng(int(seed))
    n = grid.points_per_axis
    values = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    values[np.sqrt(grid.freq_sq()) > max_freq] = 0.0
    return GridField(grid, values, SPECTRAL)


def gaussian_profile(grid):
    """The physical Gaussian e^{-|x|^2/2} (spectrally self-dual)."""
    x = grid.axis_coords()
    values = np.exp(-0.5 * (x[:, None] ** 2 + x[None, :] ** 2)).astype(complex)
    return GridField(grid, values, PHYSICAL)


def saturating_profile(grid, t):
    """Spectral profile e^{-t|xi|^2} (1+|xi|^2)^(-1) saturating Cauchy-Schwarz."""
    t = float(t)
    if t <= 0.0 or not math.isfinite(t):
        raise ValueError("t must be strictly positive")
    w = grid.freq_sq()
    values = (np.exp(-t * w) / (1.0 + w)).astype(complex)
    return GridField(grid, values, SPECTRAL)


def annular_profile(grid, lam):
    """Spectral profile |xi|^(-2) on the annulus 1 < |xi| < lam."""
    lam = float(lam)
    if lam <= 1.0:
        raise ValueError("lam must exceed 1")
    w = grid.freq_sq()
    r = np.sqrt(w)
    values = np.where((r > 1.0) & (r < lam), 1.0 / np.where(w > 0.0, w, 1.0), 0.0)
    return GridField(grid, values.astype(complex), SPECTRAL)


@dataclass(frozen=True)
class RatioReport:
    ratio: float
    exact_m: float
    margin: float


def ratio_check(fieldobj, t, tol_discretization=1e-3):
    """Compare the field's smoothing ratio against the exact norm curve.

    ratio = sup |e^{t Delta} f| / ||f||_{H^1} on the grid.  Because the
    grid sup is sampled (a lower bound) while the discrete H^1 norm is
    exact for band-limited fields, the valid inequality direction is
    ratio <= exact_m(t) (1 + tol_discretization); a violation raises
    :class:`VerificationError`.
    """
    spec = _spectral_of(fieldobj)
    h1 = sobolev_norm(spec, 1.0)
    if h1 == 0.0:
        raise ValueError("field must be nonzero")
    smoothed = to_physical(heat_apply(spec, t))
    r = sup_norm(smoothed) / h1
    m = exact_m(t)
    margin = m * (1.0 + tol_discretization) - r
    if margin < 0.0:
        raise VerificationError(
            f"discrete ratio {r!r} exceeds exact_m({t}) = {m!r} beyond the "
            f"discretization allowance {tol_discretization}"
        )
    return RatioReport(ratio=r, exact_m=m, margin=margin)


def decomposition_residual(fieldobj, t, n_quad):
    """Residual of f = e^{t Delta} f - int_0^t Delta e^{tau Delta} f dtau.

    The tau integral is evaluated spectrally (multiplier
    -|xi|^2 e^{-tau |xi|^2}) by composite Simpson on n_quad subintervals
    (n_quad even, >= 2).  Returns the relative L^2 residual against f;
    fourth-order in 1/n_quad since each mode integrand is smooth.
    """
    t = float(t)
    if t <= 0.0 or not math.isfinite(t):
        raise ValueError("t must be strictly positive")
    n_quad = int(n_quad)
    if n_quad < 2 or n_quad % 2 != 0:
        raise ValueError("n_quad must be an even integer >= 2")
    spec = _spectral_of(fieldobj)
    norm = l2_norm(spec)
    if norm == 0.0:
        raise ValueError("field must be nonzero")
    w = spec.grid.freq_sq()

    taus = np.linspace(0.0, t, n_quad + 1)
    simpson = np.ones(n_quad + 1)
    simpson[1:-1:2] = 4.0
    simpson[2:-1:2] = 2.0
    simpson *= (t / n_quad) / 3.0

    integral = np.zeros_like(spec.values, dtype=complex)
    for tau, weight in zip(taus, simpson):
        integral += weight * (-w) * np.exp(-tau * w) * spec.values

    reconstructed = np.exp(-t * w) * spec.values - integral
    residual = GridField(spec.grid, reconstructed - spec.values, SPECTRAL)
    return l2_norm(residual) / norm


def plancherel_error(fieldobj):
    """Relative gap between the physical and spectral L^2 norms."""
    if fieldobj.representation == PHYSICAL:
        phys, spec = fieldobj, to_spectral(fieldobj)
    else:
        spec, phys = fieldobj, to_physical(fieldobj)
    base = l2_norm(phys)
    if base == 0.0:
        raise ValueError("field must be nonzero")
    return abs(l2_norm(spec) - base) / base


def semigroup_error(fieldobj, t1, t2):
    """Relative L^2 gap between e^{t1}e^{t2} and e^{t1+t2} applied to f."""
    spec = _spectral_of(fieldobj)
    norm = l2_norm(spec)
    if norm == 0.0:
        raise ValueError("field must be nonzero")
    two_step = heat_apply(heat_apply(spec, t2), t1)
    one_step = heat_apply(spec, t1 + t2)
    diff = GridField(spec.grid, two_step.values - one_step.values, SPECTRAL)
    return l2_norm(diff) / norm
