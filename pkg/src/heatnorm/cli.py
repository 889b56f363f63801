"""Command-line front-end.

One subcommand per library module:

    sweep        exact curve + every explicit bound on a log grid (CSV)
    bound        general (n, q, s) smoothing coefficient table (CSV)
    extremizer   annular lower-bound certificate at one time (JSON)
    grid-verify  discrete spectral ratio check (JSON)
    bg           Brezis-Gallouet verification on grid fields (JSON)
    e1           exponential integral evaluation (JSON)

Exit codes: 0 success, 1 a mathematical assertion was violated, 2 usage
error.  Every invocation emits a run manifest (resolved parameters, tool
version, wall-clock duration) as ``#`` comment lines in CSV mode or a
``manifest`` object in JSON mode.  Identical argument vectors produce
byte-identical output except for the duration entry.
"""

import argparse
import json
import math
import sys
import time

from . import __version__, bg, curve, embedding, extremizer, grid
from .backends import backend_name
from .exceptions import QuadratureError, VerificationError
from .quadrature import QuadratureConfig
from .specfun import exp_integral_e1

_PROFILES = ("random", "gaussian", "saturating", "annular")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="heatnorm",
        description="Heat-semigroup operator norms on H^1(R^2): curve, bounds, certificates.",
    )
    parser.add_argument("--version", action="version", version=f"heatnorm {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default=None,
                        help="output format (default: csv for tables, json for reports)")
    common.add_argument("--out", default=None, help="write output to this path instead of stdout")
    common.add_argument("--tol", type=float, default=None,
                        help="accuracy knob: quadrature rel. tolerance (bound), "
                             "discretization allowance (grid-verify)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sweep", parents=[common], help="evaluate curve and bounds on a log grid")
    p.add_argument("--t-min", type=float, default=1e-9)
    p.add_argument("--t-max", type=float, default=1e4)
    p.add_argument("--points", type=int, default=400)

    p = sub.add_parser("bound", parents=[common], help="general (n,q,s) smoothing coefficient")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--q", type=float, default=2.0)
    p.add_argument("--s", type=float, default=None)
    p.add_argument("--critical", action="store_true", help="force s = n/q")
    p.add_argument("--t", type=float, default=None)
    p.add_argument("--t-grid", nargs=3, metavar=("MIN", "MAX", "POINTS"), default=None)

    p = sub.add_parser("extremizer", parents=[common], help="annular lower-bound certificate")
    p.add_argument("--t", type=float, required=True)
    p.add_argument("--lambda", dest="lam", type=float, default=None,
                   help="annulus outer radius (default: the floor-certifying choice)")
    p.add_argument("--optimize", action="store_true", help="maximize the ratio over lambda")

    p = sub.add_parser("grid-verify", parents=[common], help="discrete spectral ratio check")
    p.add_argument("--n", type=int, default=256, help="grid points per axis (power of two)")
    p.add_argument("--L", type=float, default=40.0, help="periodic box side length")
    p.add_argument("--t", type=float, default=0.1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--profile", choices=_PROFILES, default="random")

    p = sub.add_parser("bg", parents=[common], help="Brezis-Gallouet verification")
    p.add_argument("--profile", choices=_PROFILES[:2] + ("annular",), default="random")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=8)

    p = sub.add_parser("e1", parents=[common], help="exponential integral E1")
    p.add_argument("--x", type=float, required=True)

    return parser


def _require_positive(parser, value, name):
    if value is None or not math.isfinite(value) or value <= 0.0:
        parser.error(f"{name} must be strictly positive and finite")


def _run_sweep(args, parser):
    _require_positive(parser, args.t_min, "--t-min")
    _require_positive(parser, args.t_max, "--t-max")
    if args.t_max <= args.t_min:
        parser.error("--t-max must exceed --t-min")
    if args.points < 2:
        parser.error("--points must be at least 2")
    samples = curve.sweep(curve.default_grid(args.t_min, args.t_max, args.points))
    rows = [
        {
            "t": s.t,
            "exact_m": s.exact_m,
            "envelope_ub": s.envelope_ub,
            "floor_lb": s.floor_lb,
            "dyadic_ub": s.dyadic_ub,
            "n_star": s.n_star,
            "normalized_exact": s.normalized_exact,
        }
        for s in samples
    ]
    return rows, "csv"


def _run_bound(args, parser):
    _require_positive(parser, args.q, "--q")
    if args.n < 1:
        parser.error("--n must be >= 1")
    if args.critical and args.s is not None:
        parser.error("--critical and --s are mutually exclusive")
    s = args.n / args.q if args.critical else args.s
    if s is None:
        parser.error("one of --s or --critical is required")
    if args.t is None and args.t_grid is None:
        parser.error("one of --t or --t-grid is required")
    if args.t is not None and args.t_grid is not None:
        parser.error("--t and --t-grid are mutually exclusive")
    if args.t is not None:
        _require_positive(parser, args.t, "--t")
        t_values = [args.t]
    else:
        try:
            t_min, t_max = float(args.t_grid[0]), float(args.t_grid[1])
            points = int(args.t_grid[2])
        except ValueError:
            parser.error("--t-grid expects MIN MAX POINTS")
        _require_positive(parser, t_min, "--t-grid MIN")
        if t_max <= t_min or points < 2:
            parser.error("--t-grid expects MIN < MAX and POINTS >= 2")
        t_values = list(curve.default_grid(t_min, t_max, points))
    config = QuadratureConfig(rel_tol=args.tol) if args.tol else QuadratureConfig()
    try:
        params = embedding.EmbeddingParams(args.n, args.q, s)
    except ValueError as exc:
        parser.error(str(exc))
    rows = [
        {
            "n": params.n,
            "q": params.q,
            "s": params.s,
            "t": t,
            "kernel_norm": embedding.kernel_norm(params, t, config),
            "critical_log_bound": embedding.critical_log_bound(params.n, params.q, t),
        }
        for t in t_values
    ]
    return rows, "csv"


def _run_extremizer(args, parser):
    _require_positive(parser, args.t, "--t")
    if args.optimize:
        report = extremizer.optimize_lambda(args.t)
    else:
        lam = args.lam
        if lam is None:
            if args.t >= curve.FLOOR_T_MAX:
                parser.error("for t >= 1/e pass --lambda explicitly or use --optimize")
            lam = extremizer.floor_lambda(args.t)
        report = extremizer.build_report(args.t, lam)
    row = {
        "t": report.t,
        "lambda": report.lam,
        "h1_norm": report.h1_norm,
        "heat_at_origin": report.heat_at_origin,
        "ratio": report.ratio,
        "floor_lb": report.floor_lb,
        "is_optimized": report.is_optimized,
    }
    return [row], "json"


def _build_profile(parser, spectral_grid, profile, seed, t):
    if profile == "random":
        return grid.random_band_limited(seed, spectral_grid, 0.5 * spectral_grid.nyquist)
    if profile == "gaussian":
        return grid.gaussian_profile(spectral_grid)
    if profile == "saturating":
        return grid.saturating_profile(spectral_grid, t)
    if profile == "annular":
        lam = 0.5 * spectral_grid.nyquist
        return grid.annular_profile(spectral_grid, lam)
    parser.error(f"unknown profile {profile!r}")


def _run_grid_verify(args, parser):
    _require_positive(parser, args.t, "--t")
    if args.trials < 1:
        parser.error("--trials must be >= 1")
    try:
        g = grid.SpectralGrid(args.n, args.L)
    except ValueError as exc:
        parser.error(str(exc))
    tol = args.tol if args.tol else 1e-3
    seeds = range(args.seed, args.seed + args.trials)
    worst = None
    for seed in seeds:
        f = _build_profile(parser, g, args.profile, seed, args.t)
        report = grid.ratio_check(f, args.t, tol_discretization=tol)
        row = {
            "ratio": report.ratio,
            "exact_m": report.exact_m,
            "margin": report.margin,
            "plancherel_err": grid.plancherel_error(f),
            "semigroup_err": grid.semigroup_error(f, 0.3 * args.t, 0.7 * args.t),
        }
        if worst is None or row["margin"] < worst["margin"]:
            worst = row
        if args.profile != "random":
            break
    return [worst], "json"


def _run_bg(args, parser):
    if args.trials < 1:
        parser.error("--trials must be >= 1")
    g = grid.SpectralGrid(128, 20.0)
    rows = []
    for seed in range(args.seed, args.seed + args.trials):
        f = _build_profile(parser, g, args.profile, seed, 1.0)
        report = bg.bg_verify(f)
        rows.append(
            {
                "h1": report.h1,
                "h2": report.h2,
                "sup": report.sup,
                "t_star": report.t_star,
                "rhs_two_term": report.rhs_two_term,
                "rhs_bg": report.rhs_bg,
                "slack": report.slack,
            }
        )
        if args.profile != "random":
            break
    return rows, "json"


def _run_e1(args, parser):
    _require_positive(parser, args.x, "--x")
    return [{"x": args.x, "e1": exp_integral_e1(args.x)}], "json"


_RUNNERS = {
    "sweep": _run_sweep,
    "bound": _run_bound,
    "extremizer": _run_extremizer,
    "grid-verify": _run_grid_verify,
    "bg": _run_bg,
    "e1": _run_e1,
}


def _format_cell(value):
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _manifest(args, duration):
    params = {
        k: v for k, v in sorted(vars(args).items()) if k not in ("command", "out")
    }
    return {
        "subcommand": args.command,
        "parameters": params,
        "version": __version__,
        "backend": backend_name(),
        "duration_s": duration,
    }


def _emit(rows, fmt, manifest, stream):
    if fmt == "json":
        doc = {"manifest": manifest, "result": rows[0] if len(rows) == 1 else rows}
        stream.write(json.dumps(doc, indent=2))
        stream.write("\n")
        return
    for key, value in manifest.items():
        if key == "parameters":
            for pk, pv in value.items():
                stream.write(f"# param {pk}={_format_cell(pv)}\n")
        else:
            stream.write(f"# {key}={_format_cell(value)}\n")
    header = list(rows[0].keys())
    stream.write(",".join(header) + "\n")
    for row in rows:
        stream.write(",".join(_format_cell(row[k]) for k in header) + "\n")


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        rows, default_fmt = _RUNNERS[args.command](args, parser)
    except VerificationError as exc:
        failure = {"status": "violation", "subcommand": args.command, "detail": str(exc)}
        print(json.dumps(failure, indent=2), file=sys.stderr)
        return 1
    except QuadratureError as exc:
        print(json.dumps({"status": "quadrature-failure", "detail": str(exc)}), file=sys.stderr)
        return 1
    duration = time.perf_counter() - start
    fmt = args.format or default_fmt
    manifest = _manifest(args, duration)
    if args.out:
        with open(args.out, "w") as fh:
            _emit(rows, fmt, manifest, fh)
    else:
        _emit(rows, fmt, manifest, sys.stdout)
    return 0


if __name__ == "__main__":
    sys.exit(main())
