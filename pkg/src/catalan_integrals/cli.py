"""Command-line interface.

Exit codes, uniform across subcommands:

* 0 -- success (all requested checks met their tolerance)
* 1 -- a verification failure (tolerance missed, quadrature did not
       converge, or a term budget ran out)
* 2 -- usage error (bad arguments; raised by the option parser)
* 3 -- I/O failure writing requested output

Numeric text output uses 17 significant digits so values round-trip
through the printed form.
"""

from __future__ import annotations

import sys

import click

from .exact import catalan_exact, ln_exact
from .kernels import (
    binet_catalan_kernel,
    log_gamma_difference_kernel,
    malmsten_catalan_kernel,
)
from .quadrature import HalfLineTransform, QuadConfig, QuadratureNotConverged
from .report import build_report, to_csv, to_json, to_text
from .representations import (
    PENSON_MAX_N,
    RepresentationResult,
    catalan_binet,
    catalan_gamma_closed_form,
    catalan_malmsten,
    catalan_penson_mellin,
    catalan_penson_moment,
    compare_representations,
)
from .series import (
    SeriesResult,
    TermBudgetExhausted,
    glaisher_from_integral,
    stewart_sum_odd_weight,
    stewart_sum_plain,
)

_METHODS = {
    "gamma": lambda n, cfg: catalan_gamma_closed_form(n),
    "malmsten": catalan_malmsten,
    "binet": catalan_binet,
    "penson-moment": catalan_penson_moment,
    "penson-mellin": catalan_penson_mellin,
}

_KERNELS = {
    "malmsten": malmsten_catalan_kernel,
    "binet": binet_catalan_kernel,
    "difference": log_gamma_difference_kernel,
}

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE = 2
EXIT_IO = 3


def _quad_options(fn):
    fn = click.option(
        "--abs-tol",
        type=float,
        default=QuadConfig.abs_tol,
        show_default=True,
        help="Absolute quadrature tolerance.",
    )(fn)
    fn = click.option(
        "--rel-tol",
        type=float,
        default=QuadConfig.rel_tol,
        show_default=True,
        help="Relative quadrature tolerance.",
    )(fn)
    fn = click.option(
        "--max-subdivisions",
        type=int,
        default=QuadConfig.max_subdivisions,
        show_default=True,
        help="Adaptive bisection budget.",
    )(fn)
    fn = click.option(
        "--transform",
        type=click.Choice([t.value for t in HalfLineTransform]),
        default=QuadConfig.transform.value,
        show_default=True,
        help="Half-line reduction strategy.",
    )(fn)
    return fn


def _config(abs_tol: float, rel_tol: float, max_subdivisions: int, transform: str) -> QuadConfig:
    try:
        return QuadConfig(
            abs_tol=abs_tol,
            rel_tol=rel_tol,
            max_subdivisions=max_subdivisions,
            transform=HalfLineTransform(transform),
        )
    except ValueError as exc:
        raise click.UsageError(str(exc))


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _print_row(row: RepresentationResult) -> None:
    click.echo(
        f"n={row.n} method={row.method.value} ln_value={_fmt(row.ln_value)} "
        f"exact_ln={_fmt(row.exact_ln)} abs_err_ln={row.abs_err_ln:.3e} "
        f"quad_error_estimate={row.quad_error_estimate:.3e} "
        f"evaluations={row.evaluations} converged={str(row.converged).lower()}"
    )


@click.group()
def main() -> None:
    """Exact Catalan numbers, their integral representations, and
    certified series identities."""


@main.command("exact")
@click.argument("n", type=click.IntRange(min=0))
def cmd_exact(n: int) -> None:
    """Print C_N exactly (all digits), then ln C_N."""
    click.echo(str(catalan_exact(n)))
    click.echo(f"ln {_fmt(ln_exact(n))}")


@main.command("rep")
@click.argument("method", type=click.Choice(sorted(_METHODS)))
@click.argument("n", type=click.IntRange(min=0))
@click.option(
    "--tol",
    type=float,
    default=1e-8,
    show_default=True,
    help="Acceptable |ln_value - exact_ln|.",
)
@_quad_options
def cmd_rep(
    method: str,
    n: int,
    tol: float,
    abs_tol: float,
    rel_tol: float,
    max_subdivisions: int,
    transform: str,
) -> None:
    """Evaluate one representation METHOD at index N and check it."""
    config = _config(abs_tol, rel_tol, max_subdivisions, transform)
    if method.startswith("penson") and n > PENSON_MAX_N:
        raise click.UsageError(f"{method} supports n <= {PENSON_MAX_N}")
    row = _METHODS[method](n, config)
    _print_row(row)
    if not row.converged or not (row.abs_err_ln <= tol):
        sys.exit(EXIT_VERIFICATION_FAILED)


@main.command("verify")
@click.option("--n-max", type=click.IntRange(min=0), required=True, help="Sweep n = 0..N_MAX.")
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["text", "csv", "json"]),
    default="text",
    show_default=True,
)
@click.option(
    "--tol",
    type=float,
    default=1e-8,
    show_default=True,
    help="Per-row failure threshold on abs_err_ln.",
)
@click.option(
    "--output",
    type=str,
    default=None,
    help="Write the report here instead of stdout.",
)
@_quad_options
def cmd_verify(
    n_max: int,
    fmt: str,
    tol: float,
    output: str | None,
    abs_tol: float,
    rel_tol: float,
    max_subdivisions: int,
    transform: str,
) -> None:
    """Cross-check every representation against exact values for n = 0..N_MAX."""
    config = _config(abs_tol, rel_tol, max_subdivisions, transform)
    rows = compare_representations(n_max, config)
    report = build_report(rows, config, err_threshold=tol)
    rendered = {"text": to_text, "csv": to_csv, "json": to_json}[fmt](report)
    if output is None:
        click.echo(rendered, nl=False)
    else:
        try:
            with open(output, "w", encoding="utf-8") as fh:
                fh.write(rendered)
        except OSError as exc:
            click.echo(f"cannot write {output}: {exc}", err=True)
            sys.exit(EXIT_IO)
    if report.summary.failures > 0:
        sys.exit(EXIT_VERIFICATION_FAILED)


def _print_series(result: SeriesResult) -> None:
    click.echo(f"partial_sum     {_fmt(result.partial_sum)}")
    click.echo(f"terms_used      {result.terms_used}")
    click.echo(f"tail_bound      {result.tail_bound:.3e}")
    click.echo(f"certified_value {_fmt(result.certified_value)}")
    click.echo(f"target          {_fmt(result.target)}")
    click.echo(f"abs_err         {result.abs_err:.3e}")


@main.command("sumrule")
@click.argument("which", type=click.Choice(["odd-weight", "plain"]))
@click.option(
    "--tol",
    type=float,
    default=1e-6,
    show_default=True,
    help="Tail-bound stopping tolerance.",
)
def cmd_sumrule(which: str, tol: float) -> None:
    """Sum a Catalan series rule with a certified tail and check its target.

    Exits 0 only if the certified interval is consistent with the
    closed-form target (abs_err <= tol + tail_bound).
    """
    rule = stewart_sum_odd_weight if which == "odd-weight" else stewart_sum_plain
    try:
        result = rule(tol)
    except TermBudgetExhausted as exc:
        click.echo(f"term budget exhausted: {exc}", err=True)
        _print_series(exc.partial)
        sys.exit(EXIT_VERIFICATION_FAILED)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    _print_series(result)
    if not result.abs_err <= tol + result.tail_bound:
        click.echo(
            "target missed: the series does not certify to the stated closed form",
            err=True,
        )
        sys.exit(EXIT_VERIFICATION_FAILED)


@main.command("glaisher")
@_quad_options
def cmd_glaisher(
    abs_tol: float, rel_tol: float, max_subdivisions: int, transform: str
) -> None:
    """Recover the Glaisher-Kinkelin constant from the log-Gamma integral."""
    config = _config(abs_tol, rel_tol, max_subdivisions, transform)
    try:
        result = glaisher_from_integral(config)
    except QuadratureNotConverged as exc:
        click.echo(f"quadrature failed: {exc}", err=True)
        sys.exit(EXIT_VERIFICATION_FAILED)
    click.echo(f"integral_value {_fmt(result.integral_value)}")
    click.echo(f"ln_A           {_fmt(result.ln_A)}")
    click.echo(f"oracle_ln_A    {_fmt(result.oracle_ln_A)}")
    click.echo(f"abs_err        {result.abs_err:.3e}")
    if not result.abs_err <= 1e-8:
        sys.exit(EXIT_VERIFICATION_FAILED)


@main.command("dump-kernel")
@click.argument("kernel", type=click.Choice(sorted(_KERNELS)))
@click.argument("n", type=click.IntRange(min=0))
@click.option("--t-min", type=float, default=1e-8, show_default=True)
@click.option("--t-max", type=float, default=50.0, show_default=True)
@click.option("--points", type=click.IntRange(min=2), default=200, show_default=True)
def cmd_dump_kernel(
    kernel: str, n: int, t_min: float, t_max: float, points: int
) -> None:
    """Tabulate KERNEL at index N on a log-spaced grid, as CSV ``t,value``.

    Evaluation goes through the origin-limit guard, so t = 0 itself is
    allowed as T_MIN (its row carries the analytic limit).
    """
    if t_min < 0 or not t_min < t_max:
        raise click.UsageError(f"need 0 <= t_min < t_max, got [{t_min}, {t_max}]")
    spec = _KERNELS[kernel](n)
    if t_min == 0.0:
        # No log spacing from zero: pin the first row at 0 and start the
        # geometric grid far below the origin-guard threshold.
        grid = [0.0]
        lo = t_max * 1e-12
        rest = points - 1
        ratio = (t_max / lo) ** (1.0 / (rest - 1)) if rest > 1 else 1.0
        grid.extend(lo * ratio**k for k in range(rest))
    else:
        ratio = (t_max / t_min) ** (1.0 / (points - 1))
        grid = [t_min * ratio**k for k in range(points)]
    grid[-1] = t_max
    click.echo("t,value")
    for t in grid:
        click.echo(f"{t:.17g},{spec.integrand(t):.17g}")


if __name__ == "__main__":
    main()
