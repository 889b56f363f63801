"""heatnorm: the heat semigroup as an operator from H^1(R^2) to L^inf(R^2).

Evaluates the exact operator-norm curve M(t), every explicit bound around
it (logarithmic envelope, logarithmic floor, dyadic bound, the general
(n, q, s) smoothing coefficient), the annular extremizer certificates, and
a discrete spectral harness that verifies the inequalities on periodic
grids, including the Brezis-Gallouet inequality they imply.
"""

__version__ = "0.1.0"

from .backends import backend_name
from .bg import (
    BG_CONSTANT,
    BGReport,
    bg_bound,
    bg_verify,
    optimal_time,
    two_term_bound,
)
from .curve import (
    ENVELOPE_CONSTANT,
    FLOOR_CONSTANT,
    BoundCurveSample,
    default_grid,
    dyadic_bound,
    dyadic_optimal_n,
    envelope_ub,
    exact_m,
    floor_lb,
    normalized_exact,
    sweep,
)
from .embedding import (
    EmbeddingParams,
    critical_log_bound,
    critical_split_terms,
    gaussian_moment_norm,
    kernel_norm,
)
from .exceptions import QuadratureError, VerificationError
from .extremizer import (
    ExtremizerReport,
    build_report,
    floor_lambda,
    h1_norm_sq,
    heat_at_origin,
    optimize_lambda,
    ratio,
    saturating_profile_ratio,
)
from .grid import (
    GridField,
    SpectralGrid,
    annular_profile,
    decomposition_residual,
    gaussian_profile,
    heat_apply,
    random_band_limited,
    ratio_check,
    saturating_profile,
    sobolev_norm,
    sup_norm,
    to_physical,
    to_spectral,
)
from .quadrature import QuadratureConfig, radial_kernel_integral
from .specfun import (
    EULER_GAMMA,
    e1_upper_exponential,
    e1_upper_log,
    exp_integral_e1,
    exp_integral_e1_scaled,
    gamma_fn,
    unit_sphere_area,
)

__all__ = [
    "__version__",
    "backend_name",
    "BG_CONSTANT",
    "BGReport",
    "bg_bound",
    "bg_verify",
    "optimal_time",
    "two_term_bound",
    "ENVELOPE_CONSTANT",
    "FLOOR_CONSTANT",
    "BoundCurveSample",
    "default_grid",
    "dyadic_bound",
    "dyadic_optimal_n",
    "envelope_ub",
    "exact_m",
    "floor_lb",
    "normalized_exact",
    "sweep",
    "EmbeddingParams",
    "critical_log_bound",
    "critical_split_terms",
    "gaussian_moment_norm",
    "kernel_norm",
    "QuadratureError",
    "VerificationError",
    "ExtremizerReport",
    "build_report",
    "floor_lambda",
    "h1_norm_sq",
    "heat_at_origin",
    "optimize_lambda",
    "ratio",
    "saturating_profile_ratio",
    "GridField",
    "SpectralGrid",
    "annular_profile",
    "decomposition_residual",
    "gaussian_profile",
    "heat_apply",
    "random_band_limited",
    "ratio_check",
    "saturating_profile",
    "sobolev_norm",
    "sup_norm",
    "to_physical",
    "to_spectral",
    "QuadratureConfig",
    "radial_kernel_integral",
    "EULER_GAMMA",
    "e1_upper_exponential",
    "e1_upper_log",
    "exp_integral_e1",
    "exp_integral_e1_scaled",
    "gamma_fn",
    "unit_sphere_area",
]
