"""CLI entry point using Typer."""

import logging
from typing import Callable, List, Optional

import psutil
import typer

from src.algebra.complexes import matching_complex, path_graph, stanley_reisner_ideal
from src.algebra.errors import ParameterRangeError
from src.algebra.homology import check_hochster_limit, compute_invariants, field_disagreement, graded_betti
from src.algebra.line_formulas import (
    closed_form_invariants,
    height_discrepancy,
    line_facet_ideal,
    line_facets,
    omega,
    p_ideal,
)
from src.algebra.monomials import MonomialIdeal, irreducible_decomposition
from src.algebra.settings import (
    DEFAULT_CHARACTERISTIC,
    DEFAULT_HOCHSTER_LIMIT,
    EXIT_OK,
    EXIT_USAGE,
    BettiView,
    Check,
    DecomposeSource,
    IdealKind,
    InvariantMethod,
    LogLevel,
    OutputFormat,
)
from src.benchmarks import run_benchmark
from src.reporting import (
    render_benchmark,
    render_betti,
    render_decomposition,
    render_facets,
    render_ideal,
    render_invariants,
    render_verification,
)
from src.verification import VerifyOptions, run_verification

# Configure logging; records go to stderr so stdout carries only the report
logging.basicConfig(
    level=logging.WARNING,
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s"
)
logger = logging.getLogger(__name__)

app = typer.Typer(help="Facet ideals of matching complexes of paths", no_args_is_help=True)

FORMAT = typer.Option(OutputFormat.TEXT, "--format", help="Output format: text, json or csv")
FIELD = typer.Option(DEFAULT_CHARACTERISTIC, "--field", help="Field characteristic: 0 or a prime")
JOBS = typer.Option(None, "--jobs", min=1, help="Worker processes for the Hochster sweep (default: all cores)")
LIMIT = typer.Option(DEFAULT_HOCHSTER_LIMIT, "--limit", min=1, help="Largest nvars for a Hochster sweep")
FORCE = typer.Option(False, "--force", help="Run Hochster sweeps above --limit")
WHICH = typer.Option(IdealKind.FACET, "--which", help="Ideal: facet, sr or p")


def _jobs(jobs: Optional[int]) -> int:
    return jobs or psutil.cpu_count(logical=True) or 1


def _ideal_for(n: int, which: IdealKind) -> MonomialIdeal:
    if which is IdealKind.SR:
        return stanley_reisner_ideal(matching_complex(path_graph(n)))
    if which is IdealKind.P:
        return p_ideal(n)
    return line_facet_ideal(n)


def _execute(action: Callable[[], str]) -> None:
    """Run a command body; input errors exit 2, anything else is logged with a traceback."""
    try:
        output = action()
    except ValueError as e:
        typer.echo(f"Error: {e}", err=True)
        raise typer.Exit(EXIT_USAGE)
    except Exception as e:
        logger.error(f"Command failed: {e}", exc_info=True)
        raise typer.Exit(EXIT_USAGE)
    typer.echo(output)


@app.callback()
def main(
    log_level: LogLevel = typer.Option(LogLevel.WARNING, "--log-level", help="Log level: DEBUG, INFO, WARNING, ERROR"),
) -> None:
    logging.getLogger().setLevel(getattr(logging, log_level.value))


@app.command()
def facets(
    n: int = typer.Argument(..., help="Number of edges of the path"),
    offset: int = typer.Option(0, "--offset", help="Shift every edge label by this amount"),
    fmt: OutputFormat = FORMAT,
) -> None:
    """
    List the facets (maximal matchings) of the matching complex of a path.
    """
    _execute(lambda: render_facets(n, offset, line_facets(n, offset), fmt))


@app.command()
def ideal(
    n: int = typer.Argument(..., help="Number of edges of the path"),
    which: IdealKind = WHICH,
    fmt: OutputFormat = FORMAT,
) -> None:
    """
    Print the minimal generators of the facet, Stanley-Reisner or P ideal.
    """
    _execute(lambda: render_ideal(n, which.value, _ideal_for(n, which), fmt))


@app.command()
def decompose(
    n: int = typer.Argument(..., help="Number of edges of the path"),
    source: DecomposeSource = typer.Option(DecomposeSource.CLOSED_FORM, "--source", help="closed-form, brute-force or both"),
    fmt: OutputFormat = FORMAT,
) -> None:
    """
    Print the minimal primes of F(L_n), from the named cover family, by brute force, or both.
    """

    def action() -> str:
        family = omega(n) if source is not DecomposeSource.BRUTE_FORCE else None
        brute = None
        if source is not DecomposeSource.CLOSED_FORM:
            brute = irreducible_decomposition(line_facet_ideal(n))
        return render_decomposition(n, source.value, family, brute, fmt)

    _execute(action)


@app.command()
def invariants(
    n: int = typer.Argument(..., help="Number of edges of the path"),
    method: InvariantMethod = typer.Option(InvariantMethod.CLOSED_FORM, "--method", help="closed-form or hochster"),
    which: IdealKind = WHICH,
    field: int = FIELD,
    jobs: Optional[int] = JOBS,
    limit: int = LIMIT,
    force: bool = FORCE,
    diagnostic: bool = typer.Option(False, "--diagnostic", help="Also compare the Betti table over GF(2)"),
    fmt: OutputFormat = FORMAT,
) -> None:
    """
    Report pd, reg, depth, height and bight.
    """

    def action() -> str:
        if method is InvariantMethod.CLOSED_FORM:
            if which is not IdealKind.FACET:
                raise ParameterRangeError("Closed-form reports cover the facet ideal only; use --method hochster")
            return render_invariants(closed_form_invariants(n), fmt)

        ideal = _ideal_for(n, which)
        check_hochster_limit(ideal.nvars, limit, force)
        report = compute_invariants(ideal, field, _jobs(jobs), n)
        if which is IdealKind.FACET:
            note = height_discrepancy(n, report.height)
            if note:
                logger.warning(note)
                report.flags.append(note)
        if diagnostic:
            report.flags.extend(field_disagreement(ideal, _jobs(jobs)))
        return render_invariants(report, fmt)

    _execute(action)


@app.command()
def betti(
    n: int = typer.Argument(..., help="Number of edges of the path"),
    which: IdealKind = WHICH,
    field: int = FIELD,
    jobs: Optional[int] = JOBS,
    view: BettiView = typer.Option(BettiView.IDEAL, "--view", help="Table of the ideal or of the quotient ring"),
    limit: int = LIMIT,
    force: bool = FORCE,
    fmt: OutputFormat = FORMAT,
) -> None:
    """
    Print the graded Betti table computed with Hochster's formula.
    """

    def action() -> str:
        ideal = _ideal_for(n, which)
        check_hochster_limit(ideal.nvars, limit, force)
        table = graded_betti(ideal, field, _jobs(jobs))
        if view is BettiView.QUOTIENT:
            table = table.quotient_view()
        return render_betti(n, which.value, table, fmt)

    _execute(action)


def _parse_checks(text: str) -> List[Check]:
    return [Check(part.strip()) for part in text.split(",") if part.strip()]


@app.command()
def verify(
    max_n: int = typer.Option(10, "--max-n", help="Largest n swept"),
    checks: str = typer.Option(
        ",".join(c.value for c in Check), "--checks", help="Comma-separated checks to run"
    ),
    field: int = FIELD,
    strict: bool = typer.Option(False, "--strict", help="Treat flagged discrepancies as failures"),
    jobs: Optional[int] = JOBS,
    limit: int = LIMIT,
    force: bool = FORCE,
    timings: bool = typer.Option(False, "--timings", help="Include wall time per case"),
    diagnostic: bool = typer.Option(False, "--diagnostic", help="Flag Betti entries that change over GF(2)"),
    fmt: OutputFormat = FORMAT,
) -> None:
    """
    Run the verification sweeps; exit 1 if any case fails.
    """
    exit_code = EXIT_OK

    def action() -> str:
        nonlocal exit_code
        options = VerifyOptions(
            max_n=max_n,
            checks=_parse_checks(checks),
            characteristic=field,
            strict=strict,
            jobs=_jobs(jobs),
            limit=limit,
            force=force,
            timings=timings,
            diagnostic=diagnostic,
        )
        report = run_verification(options)
        exit_code = report.exit_code
        return render_verification(report, fmt)

    _execute(action)
    if exit_code != EXIT_OK:
        raise typer.Exit(exit_code)


@app.command()
def benchmark(
    n: int = typer.Argument(..., help="Number of edges of the path"),
    which: IdealKind = WHICH,
    jobs_list: str = typer.Option("1,2,4", "--jobs-list", help="Comma-separated worker counts"),
    iterations: int = typer.Option(3, "--iterations", min=1, help="Runs per worker count"),
    limit: int = LIMIT,
    force: bool = FORCE,
    fmt: OutputFormat = FORMAT,
) -> None:
    """
    Time the Hochster sweep for several worker counts.
    """

    def action() -> str:
        ideal = _ideal_for(n, which)
        check_hochster_limit(ideal.nvars, limit, force)
        counts = [int(part) for part in jobs_list.split(",") if part.strip()]
        if not counts or min(counts) < 1:
            raise ParameterRangeError(f"--jobs-list needs positive integers, got '{jobs_list}'")
        return render_benchmark(run_benchmark(ideal, counts, iterations), fmt)

    _execute(action)


if __name__ == "__main__":
    app()
