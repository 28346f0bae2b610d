"""Command-line front end: point evaluation, table generation, and the
verification suites.

Exit codes: 0 on success (all verification expectations met), 1 on a
verification failure or numerical error, 2 on usage errors.
"""

from __future__ import annotations

import csv
import io
import json
import sys

import click

from . import __version__
from .checks import SUITES, Config, run_suite
from .errors import BsfracError
from .msm import FunctionKind, MsmParams, Side, msm_bs_closed_form, msm_power_image
from .pathway import (
    PathwayDensityParams,
    PathwayParams,
    pathway_bs_closed_form,
    pathway_density,
    pathway_power_image,
)
from .series import bessel_first_kind, bessel_struve_kernel, struve
from .wright import WrightSpec, wright_eval

FUNCTIONS = ("S", "J", "I", "H", "L", "wright", "msm-left", "msm-right",
             "pathway", "density")
KIND_NAMES = {
    "monomial": "monomial",
    "bs": "bs",
    "exp": "exp",
    "expm1-over-t": "expm1_over_t",
    "i0-plus-l0": "i0_plus_l0",
    "two-i1-plus-two-l1-over-t": "two_i1_plus_two_l1_over_t",
}


def _fmt(v) -> str:
    if isinstance(v, float):
        return f"{v:.17g}"
    return str(v)


def _emit(ctx_obj, headers, rows):
    fmt = ctx_obj["format"]
    if fmt == "json":
        text = json.dumps([dict(zip(headers, row)) for row in rows], indent=2)
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(headers)
        for row in rows:
            writer.writerow([_fmt(v) for v in row])
        text = buf.getvalue().rstrip("\n")
    out = ctx_obj.get("out")
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        click.echo(text)


def _require(opts, names):
    missing = [n for n in names if opts.get(n.replace("-", "_")) is None]
    if missing:
        raise click.UsageError("missing required option(s): "
                               + ", ".join(f"--{n}" for n in missing))


def _parse_pairs(text: str):
    pairs = []
    try:
        for chunk in text.split(";"):
            a, b = chunk.split(",")
            pairs.append((float(a), float(b)))
    except ValueError as exc:
        raise click.UsageError(f"bad pair list {text!r}; use 'a,A;b,B'") from exc
    return tuple(pairs)


def _evaluate(function: str, opts: dict, x: float):
    """Dispatch one evaluation; returns (value, abs_error_est, terms_used)."""
    if function == "S":
        _require(opts, ["nu"])
        r = bessel_struve_kernel(opts["nu"], x)
        return r.value, r.abs_error_est, r.terms_used
    if function in ("J", "I", "H", "L"):
        _require(opts, ["nu"])
        fn = bessel_first_kind if function in ("J", "I") else struve
        r = fn(opts["nu"], x, modified=function in ("I", "L"))
        return r.value, r.abs_error_est, r.terms_used
    if function == "wright":
        _require(opts, ["upper", "lower"])
        spec = WrightSpec(_parse_pairs(opts["upper"]), _parse_pairs(opts["lower"]))
        r = wright_eval(spec, x)
        return r.value, r.abs_error_est, r.terms_used
    if function in ("msm-left", "msm-right"):
        _require(opts, ["gamma", "rho"])
        side = Side.LEFT if function == "msm-left" else Side.RIGHT
        params = MsmParams(opts["alpha"], opts["alpha_prime"], opts["beta"],
                           opts["beta_prime"], opts["gamma"])
        kind = _build_kind(opts)
        if kind.family == "monomial":
            img = msm_power_image(side, params, kind.rho)
        else:
            img = msm_bs_closed_form(side, params, kind)
        r = img.value_at(x)
        return r.value, r.abs_error_est, r.terms_used
    if function == "pathway":
        _require(opts, ["eta", "a", "pathway-alpha", "rho"])
        params = PathwayParams(opts["eta"], opts["a"], opts["pathway_alpha"])
        kind = _build_kind(opts)
        if kind.family == "monomial":
            img = pathway_power_image(params, kind.rho)
        else:
            img = pathway_bs_closed_form(params, kind)
        r = img.value_at(x)
        return r.value, r.abs_error_est, r.terms_used
    _require(opts, ["gamma-shape", "delta", "beta-shape", "a", "pathway-alpha"])
    dp = PathwayDensityParams(opts["gamma_shape"], opts["delta"],
                              opts["beta_shape"], opts["a"], opts["pathway_alpha"])
    return pathway_density(dp, x), 0.0, 1


def _build_kind(opts) -> FunctionKind:
    family = KIND_NAMES[opts["kind"]]
    if family == "bs":
        _require(opts, ["nu"])
        return FunctionKind.bs_kernel(opts["rho"], opts["nu"], opts["lam"])
    return FunctionKind(family, opts["rho"])


_PARAM_OPTIONS = [
    click.option("--nu", type=float, default=None, help="series order"),
    click.option("--lam", type=float, default=1.0, help="kernel argument scale"),
    click.option("--alpha", type=float, default=0.0),
    click.option("--alpha-prime", type=float, default=0.0),
    click.option("--beta", type=float, default=0.0),
    click.option("--beta-prime", type=float, default=0.0),
    click.option("--gamma", type=float, default=None, help="operator order"),
    click.option("--rho", type=float, default=None, help="power exponent of the integrand"),
    click.option("--kind", type=click.Choice(sorted(KIND_NAMES)), default="monomial"),
    click.option("--eta", type=float, default=None),
    click.option("--a", type=float, default=None, help="pathway scale"),
    click.option("--pathway-alpha", type=float, default=None),
    click.option("--gamma-shape", type=float, default=None),
    click.option("--delta", type=float, default=None),
    click.option("--beta-shape", type=float, default=None),
    click.option("--upper", type=str, default=None, help="wright upper pairs 'a,A;a,A'"),
    click.option("--lower", type=str, default=None, help="wright lower pairs 'b,B;b,B'"),
]


def _with_params(cmd):
    for opt in reversed(_PARAM_OPTIONS):
        cmd = opt(cmd)
    return cmd


@click.group()
@click.version_option(__version__)
@click.option("--tol", type=float, default=None, help="tolerance override for verify")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv",
              show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None,
              help="write output to a file instead of stdout")
@click.option("--threads", type=int, default=1, show_default=True)
@click.option("--seed-grid", type=click.Path(exists=True, dir_okay=False), default=None,
              help="JSON file overriding verification grids")
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False),
              default=None, help="JSON config with tolerances, grids, term_cap")
@click.pass_context
def main(ctx, tol, fmt, out, threads, seed_grid, config_path):
    """Special-function evaluation and identity verification."""
    ctx.obj = {"tol": tol, "format": fmt, "out": out, "threads": threads,
               "seed_grid": seed_grid, "config_path": config_path}


@main.command("eval")
@click.argument("function", type=click.Choice(FUNCTIONS))
@click.option("--x", type=float, required=True, help="evaluation point")
@_with_params
@click.pass_context
def eval_cmd(ctx, function, x, **opts):
    """Evaluate one function at one point."""
    try:
        value, err, terms = _evaluate(function, opts, x)
    except BsfracError as exc:
        raise click.UsageError(str(exc)) from exc
    _emit(ctx.obj, ["value", "abs_error_est", "terms_used"], [[value, err, terms]])


def _parse_range(text: str):
    parts = text.split(":")
    if len(parts) != 3:
        raise click.UsageError(f"bad range {text!r}; use start:stop:count")
    try:
        start, stop = float(parts[0]), float(parts[1])
        count = int(parts[2])
    except ValueError as exc:
        raise click.UsageError(f"bad range {text!r}; use start:stop:count") from exc
    if count < 1:
        raise click.UsageError("range count must be at least 1")
    if count == 1:
        return [start]
    step = (stop - start) / (count - 1)
    return [start + i * step for i in range(count)]


@main.command("table")
@click.argument("function", type=click.Choice(FUNCTIONS))
@click.option("--x", "x_range", type=str, required=True,
              help="sweep range start:stop:count")
@_with_params
@click.pass_context
def table_cmd(ctx, function, x_range, **opts):
    """Tabulate one function over a grid of evaluation points."""
    xs = _parse_range(x_range)
    rows = []
    for x in xs:
        try:
            value, err, _ = _evaluate(function, opts, x)
        except BsfracError as exc:
            raise click.UsageError(str(exc)) from exc
        rows.append([x, value, err])
    _emit(ctx.obj, ["x", "value", "abs_error_est"], rows)


@main.command("verify")
@click.argument("suite", default="all")
@click.pass_context
def verify_cmd(ctx, suite):
    """Run a verification suite and emit its machine-readable report."""
    if suite not in SUITES:
        raise click.UsageError(
            f"unknown suite {suite!r}; choose from {', '.join(sorted(SUITES))}")
    cfg = Config.load(ctx.obj["config_path"], ctx.obj["seed_grid"])
    report = run_suite(suite, tolerance_override=ctx.obj["tol"], config=cfg,
                       threads=max(1, ctx.obj["threads"]))
    doc = report.to_dict()
    for check in doc["checks"]:
        click.echo(f"{check['id']}: {check['status']} "
                   f"(max_rel_dev={check['max_rel_dev']:.3e}, "
                   f"n={check['n_points']})", err=True)
    if ctx.obj["format"] == "json":
        text = json.dumps(doc, indent=2)
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["id", "status", "max_rel_dev", "n_points", "worst_point"])
        for check in doc["checks"]:
            point = "|".join(f"{k}={_fmt(v)}" for k, v in check["worst_point"].items())
            writer.writerow([check["id"], check["status"],
                             _fmt(check["max_rel_dev"]), check["n_points"], point])
        text = buf.getvalue().rstrip("\n")
    out = ctx.obj.get("out")
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        click.echo(text)
    if not report.all_expected():
        sys.exit(1)
