"""Command-line front end producing CSV files.

Subcommands: ``coeffs`` (coefficient tables), ``transform`` (transform
curves), ``error-study`` (per-level absolute errors against an exact
reference), ``bench`` (series vs direct-quadrature timings).  Exit
codes: 0 success, 2 argument error, 3 input-data error, 4 numerical
convergence error.
"""

import argparse
import math
import os
import sys
import tempfile
import time
from dataclasses import dataclass, field

import numpy as np

from .haar import (
    WaveletCoefficients,
    decompose,
    gaussian_exact_transform,
    gaussian_radial_function,
    sampled_radial_function,
)
from .oracle import IntegrationError, QuadratureConfig, direct_hankel
from .series import TransformOrder, transform_grid


class InputDataError(ValueError):
    """Malformed or unreadable input data (exit code 3)."""


@dataclass
class RunConfig:
    command: str
    function: str
    a: float
    input_path: str | None
    order: TransformOrder
    h: float
    levels: list
    eps: float
    pmin: float | None
    pmax: float | None
    pcount: int | None
    compare_analytic: bool
    output: str
    quad: QuadratureConfig
    coeff_quad: QuadratureConfig = field(default_factory=lambda: QuadratureConfig(
        abs_tol=1e-12, rel_tol=1e-12))


def _fmt(x):
    return format(float(x), ".17g")


def _atomic_write(path, text):
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_coefficients_csv(coeffs, path):
    """Write a table as ``j,k,value`` rows; j = -1 marks scaling entries."""
    lines = ["j,k,value"]
    for k in sorted(coeffs.scaling):
        lines.append(f"-1,{k},{_fmt(coeffs.scaling[k])}")
    for j, k in sorted(coeffs.details):
        lines.append(f"{j},{k},{_fmt(coeffs.details[(j, k)])}")
    _atomic_write(path, "\n".join(lines) + "\n")


def read_coefficients_csv(path, h):
    """Read a ``j,k,value`` table back; the support length is not stored
    in the file and must be supplied."""
    scaling = {}
    details = {}
    try:
        fh = open(path, newline="")
    except OSError as exc:
        raise InputDataError(f"{path}: {exc.strerror}") from exc
    with fh:
        for lineno, line in enumerate(fh, start=1):
            text = line.strip()
            if not text:
                continue
            parts = text.split(",")
            if lineno == 1 and parts[:3] == ["j", "k", "value"]:
                continue
            if len(parts) != 3:
                raise InputDataError(f"{path}: line {lineno}: expected j,k,value")
            try:
                j, k, v = int(parts[0]), int(parts[1]), float(parts[2])
            except ValueError:
                raise InputDataError(f"{path}: line {lineno}: malformed number") from None
            if j == -1:
                scaling[k] = v
            else:
                details[(j, k)] = v
    if not scaling:
        raise InputDataError(f"{path}: no scaling row (j = -1) found")
    max_level = max((j for j, _ in details), default=0)
    return WaveletCoefficients(
        h=h, max_level=max_level, scaling=scaling, details=details, threshold=0.0
    )


def read_samples_csv(path):
    """Load a two-column ``r,value`` sample file into a RadialFunction."""
    radii = []
    values = []
    try:
        fh = open(path, newline="")
    except OSError as exc:
        raise InputDataError(f"{path}: {exc.strerror}") from exc
    with fh:
        for lineno, line in enumerate(fh, start=1):
            text = line.strip()
            if not text:
                continue
            parts = text.split(",")
            if lineno == 1 and parts[:2] == ["r", "value"]:
                continue
            if len(parts) != 2:
                raise InputDataError(f"{path}: line {lineno}: expected two columns r,value")
            try:
                r, v = float(parts[0]), float(parts[1])
            except ValueError:
                raise InputDataError(f"{path}: line {lineno}: malformed number") from None
            if not (math.isfinite(r) and math.isfinite(v)):
                raise InputDataError(f"{path}: line {lineno}: values must be finite")
            if r < 0.0:
                raise InputDataError(f"{path}: line {lineno}: r must be >= 0")
            if radii and r <= radii[-1]:
                raise InputDataError(f"{path}: line {lineno}: r must be strictly increasing")
            radii.append(r)
            values.append(v)
    if not radii:
        raise InputDataError(f"{path}: no samples found")
    return sampled_radial_function(radii, values)


def _radial_input(cfg):
    if cfg.function == "gaussian":
        return gaussian_radial_function(cfg.a)
    return read_samples_csv(cfg.input_path)


def _table(cfg, level):
    f = _radial_input(cfg)
    return decompose(f, cfg.h, level, cfg.eps, cfg.order, cfg.coeff_quad)


def _grid(cfg):
    return np.linspace(cfg.pmin, cfg.pmax, cfg.pcount)


def _exact_reference(cfg, grid):
    # closed form for the gaussian order-1 case, quadrature otherwise
    if cfg.function == "gaussian" and cfg.order is TransformOrder.ORDER1:
        return [gaussian_exact_transform(cfg.a, p) for p in grid]
    f = _radial_input(cfg)
    return [direct_hankel(f, cfg.order, p, cfg.quad) for p in grid]


def _reconstructed_profile(coeffs):
    # f(r) whose g(r) = f(r)*r matches the stored table exactly
    dense = {}
    for j in range(coeffs.max_level + 1):
        level = np.zeros(2**j)
        for (jj, k), d in coeffs.details.items():
            if jj == j:
                level[k] = d
        dense[j] = level

    def g_hat(x):
        out = np.where((x >= 0.0) & (x < 1.0), coeffs.scaling[0], 0.0)
        for j, level in dense.items():
            scale = 2.0**j
            k = np.floor(x * scale)
            inside = (k >= 0) & (k < scale)
            ki = np.clip(k, 0, scale - 1).astype(int)
            t = x * scale - k
            sign = np.where(t < 0.5, 1.0, -1.0)
            out = out + np.where(inside, level[ki] * 2.0 ** (0.5 * j) * sign, 0.0)
        return out

    class _Profile:
        def evaluate(self, r):
            r = np.asarray(r, dtype=float)
            return g_hat(r / coeffs.h) / np.where(r == 0.0, np.inf, r)

    return _Profile()


def cmd_coeffs(cfg):
    write_coefficients_csv(_table(cfg, cfg.levels[0]), cfg.output)


def cmd_transform(cfg):
    grid = _grid(cfg)
    curve = transform_grid(_table(cfg, cfg.levels[0]), cfg.order, grid)
    if cfg.compare_analytic:
        lines = ["p,value,exact,abs_err"]
        for p, v in curve:
            e = gaussian_exact_transform(cfg.a, p)
            lines.append(f"{_fmt(p)},{_fmt(v)},{_fmt(e)},{_fmt(abs(v - e))}")
    else:
        lines = ["p,value"]
        lines.extend(f"{_fmt(p)},{_fmt(v)}" for p, v in curve)
    _atomic_write(cfg.output, "\n".join(lines) + "\n")


def cmd_error_study(cfg):
    grid = _grid(cfg)
    exact = _exact_reference(cfg, grid)
    curves = [transform_grid(_table(cfg, lvl), cfg.order, grid) for lvl in cfg.levels]
    lines = ["p," + ",".join(f"err_J{lvl}" for lvl in cfg.levels)]
    for i, p in enumerate(grid):
        errs = (abs(curve.points[i][1] - exact[i]) for curve in curves)
        lines.append(_fmt(p) + "," + ",".join(_fmt(e) for e in errs))
    _atomic_write(cfg.output, "\n".join(lines) + "\n")


def cmd_bench(cfg):
    grid = _grid(cfg)
    level = cfg.levels[0]
    coeffs = _table(cfg, level)

    t0 = time.perf_counter()
    curve = transform_grid(coeffs, cfg.order, grid)
    series_ms = 1e3 * (time.perf_counter() - t0)

    # quadrature baseline on the profile the table represents, so the
    # two columns measure the same quantity
    profile = _reconstructed_profile(coeffs)
    quad = QuadratureConfig(
        abs_tol=cfg.quad.abs_tol,
        rel_tol=cfg.quad.rel_tol,
        max_panels=cfg.quad.max_panels,
        nodes_per_panel=cfg.quad.nodes_per_panel,
        r_max=cfg.h,
    )
    cuts = cfg.h * np.arange(1, 2 ** (level + 1)) * 2.0 ** -(level + 1)
    t0 = time.perf_counter()
    baseline = [direct_hankel(profile, cfg.order, p, quad, breakpoints=cuts) for p in grid]
    oracle_ms = 1e3 * (time.perf_counter() - t0)

    diff = max(
        (abs(v - b) for (_, v), b in zip(curve, baseline)), default=0.0
    )
    lines = [
        "p_count,J,series_ms,oracle_ms,max_abs_diff",
        f"{len(grid)},{level},{series_ms:.3f},{oracle_ms:.3f},{_fmt(diff)}",
    ]
    _atomic_write(cfg.output, "\n".join(lines) + "\n")


_COMMANDS = {
    "coeffs": cmd_coeffs,
    "transform": cmd_transform,
    "error-study": cmd_error_study,
    "bench": cmd_bench,
}


def _add_common(sub, grid):
    sub.add_argument("--function", choices=("gaussian", "samples"), default="gaussian")
    sub.add_argument("--a", type=float, default=1.0, help="gaussian width parameter")
    sub.add_argument("--input", help="two-column r,value CSV for --function samples")
    sub.add_argument("--order", type=int, choices=(0, 1), required=True)
    sub.add_argument("--h", type=float, required=True, help="truncation radius")
    sub.add_argument("--eps", type=float, default=0.0, help="detail threshold")
    sub.add_argument("--output", required=True)
    sub.add_argument("--quad-abs-tol", type=float, default=1e-11)
    sub.add_argument("--quad-rel-tol", type=float, default=1e-11)
    sub.add_argument("--max-panels", type=int, default=100_000)
    sub.add_argument("--nodes-per-panel", type=int, default=32)
    sub.add_argument("--rmax", type=float, help="oracle truncation radius (default h)")
    if grid:
        sub.add_argument("--pmin", type=float, required=True)
        sub.add_argument("--pmax", type=float, required=True)
        sub.add_argument("--pcount", type=int, required=True)


def _parser():
    parser = argparse.ArgumentParser(
        prog="haarhankel",
        description="Hankel transforms via Haar wavelet series, CSV in and out.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", help="write a j,k,value coefficient table")
    _add_common(p, grid=False)
    p.add_argument("--level", type=int, required=True)

    p = sub.add_parser("transform", help="write a p,value transform curve")
    _add_common(p, grid=True)
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--compare-analytic", action="store_true")

    p = sub.add_parser("error-study", help="per-level absolute errors on a p grid")
    _add_common(p, grid=True)
    p.add_argument("--levels", required=True, help="comma-separated levels, e.g. 2,3,4")

    p = sub.add_parser("bench", help="time the series against the quadrature baseline")
    _add_common(p, grid=True)
    p.add_argument("--level", type=int, required=True)

    return parser


def _config(parser, args):
    if args.function == "samples" and not args.input:
        parser.error("--function samples requires --input")
    if args.command == "error-study":
        try:
            levels = [int(s) for s in args.levels.split(",") if s.strip()]
        except ValueError:
            parser.error("--levels must be comma-separated integers")
        if len(levels) < 2:
            parser.error("--levels needs at least two levels")
    else:
        levels = [args.level]
    if any(lvl < 0 or lvl > 30 for lvl in levels):
        parser.error("levels must lie in [0, 30]")
    if getattr(args, "compare_analytic", False):
        if args.function != "gaussian" or args.order != 1:
            parser.error("--compare-analytic needs --function gaussian --order 1")
    pmin = getattr(args, "pmin", None)
    pmax = getattr(args, "pmax", None)
    pcount = getattr(args, "pcount", None)
    if pmin is not None:
        if not pmin < pmax:
            parser.error("--pmin must be < --pmax")
        if pmin < 0.0:
            parser.error("--pmin must be >= 0")
        if pcount < 1:
            parser.error("--pcount must be >= 1")
    if not args.h > 0.0:
        parser.error("--h must be > 0")
    if args.eps < 0.0:
        parser.error("--eps must be >= 0")
    try:
        quad = QuadratureConfig(
            abs_tol=args.quad_abs_tol,
            rel_tol=args.quad_rel_tol,
            max_panels=args.max_panels,
            nodes_per_panel=args.nodes_per_panel,
            r_max=args.rmax if args.rmax is not None else args.h,
        )
        coeff_quad = QuadratureConfig(
            abs_tol=min(1e-12, args.quad_abs_tol),
            rel_tol=min(1e-12, args.quad_rel_tol),
            max_panels=args.max_panels,
            nodes_per_panel=args.nodes_per_panel,
        )
    except ValueError as exc:
        parser.error(str(exc))
    return RunConfig(
        command=args.command,
        function=args.function,
        a=args.a,
        input_path=args.input,
        order=TransformOrder(args.order),
        h=args.h,
        levels=levels,
        eps=args.eps,
        pmin=pmin,
        pmax=pmax,
        pcount=pcount,
        compare_analytic=getattr(args, "compare_analytic", False),
        output=args.output,
        quad=quad,
        coeff_quad=coeff_quad,
    )


def main(argv=None):
    parser = _parser()
    try:
        cfg = _config(parser, parser.parse_args(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _COMMANDS[cfg.command](cfg)
    except InputDataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except IntegrationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
