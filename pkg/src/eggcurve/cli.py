"""eggcurve command line: eval, table, solve, plot, examples."""

from __future__ import annotations

import json
import sys

import click

from .curve import EggParams
from .errors import (AmbiguityError, ConvergenceError, EggError, InvalidParameterError,
                     OutOfRangeError)
from .examples import run_all
from .inverse import MissingColumnError, evaluate_table, read_table, solve_w_for_area, solve_w_for_volume
from .report import build_report, dumps, report_to_dict, report_to_text
from .svg import MIN_SAMPLES, render_svg

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT = 2
EXIT_RANGE = 3
EXIT_CONVERGENCE = 4


def _fail(msg: str, code: int):
    click.echo(f"error: {msg}", err=True)
    sys.exit(code)


def _params(a: float, b: float, w: float) -> EggParams:
    try:
        return EggParams(a, b, w)
    except InvalidParameterError as exc:
        _fail(str(exc), EXIT_INPUT)


@click.group()
def main():
    """Area, volume and surface of the egg curve and its solid."""


@main.command("eval")
@click.option("--a", "a", type=float, required=True, help="Semi-length.")
@click.option("--b", "b", type=float, required=True, help="Semi-breadth.")
@click.option("--w", "w", type=float, default=0.0, show_default=True, help="Asymmetry offset.")
@click.option("--tol", type=float, default=1e-10, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True)
def cmd_eval(a, b, w, tol, fmt):
    """Evaluate one shape."""
    params = _params(a, b, w)
    try:
        rep = build_report(params, tol)
    except ConvergenceError as exc:
        _fail(str(exc), EXIT_CONVERGENCE)
    click.echo(dumps(report_to_dict(rep)) if fmt == "json" else report_to_text(rep))


@main.command("table")
@click.argument("csv_path", type=click.Path(dir_okay=False))
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True)
def cmd_table(csv_path, fmt):
    """Evaluate a CSV of profiles (columns L, B, A, w) and report R^2."""
    try:
        with open(csv_path, encoding="utf-8", newline="") as fh:
            records, warnings = read_table(fh)
    except OSError as exc:
        _fail(f"cannot read {csv_path}: {exc.strerror}", EXIT_INPUT)
    except MissingColumnError as exc:
        _fail(str(exc), EXIT_INPUT)
    except (UnicodeDecodeError, EggError) as exc:
        _fail(str(exc), EXIT_INPUT)
    if not records:
        _fail("no data rows", EXIT_INPUT)
    for msg in warnings:
        click.echo(f"warning: {msg}", err=True)
    try:
        r2 = evaluate_table(records)
    except (InvalidParameterError, EggError) as exc:
        _fail(str(exc), EXIT_INPUT)

    if fmt == "json":
        rows = [{"no": r.no, "L": r.L, "B": r.B, "w": r.w, "A": r.observed, "area": r.predicted}
                for r in records]
        click.echo(dumps({"rows": rows, "r_squared": r2, "warnings": len(warnings)}))
        return
    click.echo(f"{'No.':>4} {'L':>8} {'B':>8} {'w':>8} {'A':>10} {'area':>12}")
    for r in records:
        click.echo(f"{r.no or '':>4} {r.L:8.4g} {r.B:8.4g} {r.w:8.4g} {r.observed:10.6g} {r.predicted:12.10g}")
    r2_txt = "undefined" if r2 is None else f"{r2:.6f}"
    click.echo(f"rows {len(records)}  R^2 {r2_txt}  warnings {len(warnings)}")


@main.command("solve")
@click.option("--a", "a", type=float, required=True)
@click.option("--b", "b", type=float, required=True)
@click.option("--quantity", type=click.Choice(["area", "volume"]), required=True)
@click.option("--target", type=float, required=True)
@click.option("--tol", type=float, default=1e-10, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True)
def cmd_solve(a, b, quantity, target, tol, fmt):
    """Find the offset w that yields a target area or volume."""
    _params(a, b, 0.0)
    solver = solve_w_for_area if quantity == "area" else solve_w_for_volume
    try:
        rep = solver(a, b, target, tol)
    except OutOfRangeError as exc:
        lo, hi = exc.bounds
        _fail(f"{exc} (achievable {quantity} range: ({lo:.12g}, {hi:.12g}))", EXIT_RANGE)
    except (AmbiguityError, ConvergenceError) as exc:
        _fail(str(exc), EXIT_CONVERGENCE)
    if fmt == "json":
        click.echo(dumps({"w": rep.w, "residual": rep.residual, "iterations": rep.iterations,
                          "converged": rep.converged, "bracket": list(rep.bracket)}))
    else:
        click.echo(f"w          {rep.w:.12g}\nresidual   {rep.residual:.3e}\niterations {rep.iterations}")
    if not rep.converged:
        sys.exit(EXIT_CONVERGENCE)


@main.command("plot")
@click.option("--a", "a", type=float, required=True)
@click.option("--b", "b", type=float, required=True)
@click.option("--w", "w", type=float, default=0.0, show_default=True)
@click.option("--samples", type=int, default=256, show_default=True)
@click.option("--out", "out_path", type=click.Path(dir_okay=False), required=True)
def cmd_plot(a, b, w, samples, out_path):
    """Write the outline as an SVG file."""
    params = _params(a, b, w)
    if samples < MIN_SAMPLES:
        _fail(f"samples must be >= {MIN_SAMPLES}", EXIT_INPUT)
    text = render_svg(params, samples)
    try:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        _fail(f"cannot write {out_path}: {exc.strerror}", EXIT_INPUT)
    click.echo(out_path)


@main.command("examples")
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True)
def cmd_examples(fmt):
    """Re-run the four published worked examples against their printed values."""
    checks = run_all()
    if fmt == "json":
        click.echo(json.dumps([{"name": c.name, "computed": c.computed, "expected": c.expected,
                                "passed": c.passed} for c in checks], indent=2))
    else:
        for c in checks:
            click.echo(c.line())
        click.echo(f"{sum(c.passed for c in checks)}/{len(checks)} checks passed")
    if not all(c.passed for c in checks):
        sys.exit(EXIT_CHECK_FAILED)


if __name__ == "__main__":
    main()
