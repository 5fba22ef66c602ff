"""
CLI for computing D-invariant obstructions.
"""

import csv
import logging
import sys
from pathlib import Path

import click

from ..diagram import GoeritzForm, parse_pd
from ..dinv import BoxSearch, lattice_context
from ..grs import obstruction
from ..utils.config import Config, get_config, set_config
from ..utils.errors import ObstructionError, OracleLimitError
from ..utils.helpers import format_rational
from .batch import read_lines, run_batch
from .serialize import (
    CSV_COLUMNS,
    csv_row,
    dumps,
    pretty_table,
    report_to_dict,
    summarize,
    summary_line,
)

logger = logging.getLogger(__name__)


def _configure_logging(level: int) -> None:
    root = logging.getLogger("src")
    for handler in [h for h in root.handlers if getattr(h, "_grs_handler", False)]:
        root.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s:%(name)s: %(message)s"))
    handler._grs_handler = True
    root.addHandler(handler)
    root.setLevel(level)


def _fail(error: ObstructionError):
    raise click.ClickException(f"{error.stage}: {error.message}")


@click.group()
@click.option("--config", "config_path", type=click.Path(dir_okay=False), help="Path to a JSON config file")
@click.option("--verbose", "-v", count=True, help="Increase log verbosity (-v info, -vv debug)")
@click.pass_context
def cli(ctx, config_path, verbose):
    """Knot concordance obstructions from Heegaard Floer correction terms."""
    config = Config(config_path) if config_path else get_config()
    set_config(config)
    level = config.get_log_level()
    if verbose:
        level = logging.DEBUG if verbose > 1 else logging.INFO
    _configure_logging(level)
    ctx.obj = config


@cli.command()
@click.option("--pd", "pd_file", type=click.Path(exists=True, dir_okay=False), help="File holding a PD code")
@click.option("--goeritz", help='Negative-definite matrix, e.g. "[[-3]]"')
@click.option("--name", help="Knot name for the report")
@click.option("--pretty", is_flag=True, help="Print a human-readable table instead of JSON")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json", help="Output format")
def compute(pd_file, goeritz, name, pretty, fmt):
    """Compute the obstruction report for one knot."""
    if (pd_file is None) == (goeritz is None):
        raise click.UsageError("Give exactly one of --pd or --goeritz")
    try:
        if pd_file is not None:
            source = parse_pd(Path(pd_file).read_text())
            name = name or Path(pd_file).stem
        else:
            source = GoeritzForm.from_rows(goeritz)
            name = name or "knot"
        report = obstruction(source, name=name)
    except ObstructionError as e:
        _fail(e)

    if pretty:
        click.echo(pretty_table(report))
    elif fmt == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        writer.writerow(csv_row(report_to_dict(report)))
    else:
        click.echo(dumps(report_to_dict(report), indent=2))


@cli.command()
@click.option("--input", "input_file", required=True, type=click.Path(exists=True, dir_okay=False),
              help="JSON-lines file of knot records")
@click.option("--output", "output_file", default="-", type=click.Path(dir_okay=False, allow_dash=True),
              help="Output file (default: standard output)")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default=None, help="Output format")
@click.option("--jobs", "-j", type=int, default=None, help="Number of worker processes")
@click.option("--verify", is_flag=True, help="Exit nonzero when a record disagrees with its expected values")
@click.pass_obj
def batch(config, input_file, output_file, fmt, jobs, verify):
    """Process a file of knot records, one report per record."""
    fmt = fmt or config.get("batch.format", "json")
    jobs = jobs if jobs is not None else config.get_jobs()
    if jobs < 1:
        raise click.BadParameter("--jobs must be at least 1")

    items = read_lines(Path(input_file).read_text().splitlines())
    results = run_batch(items, jobs=jobs)
    counts = summarize(results)

    with click.open_file(output_file, "w") as out:
        if fmt == "csv":
            writer = csv.writer(out, lineterminator="\n")
            writer.writerow(CSV_COLUMNS)
            for record in results:
                writer.writerow(csv_row(record))
            out.write(summary_line(counts) + "\n")
        else:
            for record in results:
                out.write(dumps(record) + "\n")
            out.write(dumps({"summary": counts}) + "\n")

    for record in results:
        if record.get("check", {}).get("status") == "mismatch":
            click.echo(f"mismatch: {record['name']}: {record['check']['detail']}", err=True)
        if "error" in record:
            click.echo(f"error: {record['name']}: {record['error']['stage']}: {record['error']['message']}",
                       err=True)
    if counts["error"] or (verify and counts["mismatch"]):
        sys.exit(1)


@cli.command()
@click.option("--goeritz", required=True, help='Negative-definite matrix, e.g. "[[-3]]"')
@click.option("--box", "bound", type=int, default=None, help="Box half-width B")
@click.pass_obj
def oracle(config, goeritz, bound):
    """Cross-check the sphere decoder against exhaustive box search."""
    bound = bound if bound is not None else config.get_box_bound()
    limits = config.get_oracle_limits()
    try:
        form = GoeritzForm.from_rows(goeritz)
        if form.rank > limits["max_rank"] or bound > limits["max_box"] or bound < 0:
            raise OracleLimitError(
                f"Oracle limits exceeded: rank {form.rank} (max {limits['max_rank']}), "
                f"box {bound} (max {limits['max_box']})"
            )
        context = lattice_context(form)
        labels = list(context.group.elements())
        agree = 0
        for label in labels:
            exact = context.maximize(label).value
            boxed = context.maximize(label, search=BoxSearch(bound)).value
            if exact != boxed:
                click.echo(f"{agree}/{len(labels)} classes agree")
                click.echo(
                    f"discrepancy at h={list(label)}: sphere decoder {format_rational(exact)}, "
                    f"box search {format_rational(boxed)}"
                )
                sys.exit(1)
            agree += 1
    except ObstructionError as e:
        _fail(e)

    click.echo(f"{agree}/{len(labels)} classes agree")
    if len(labels) == 1:
        d = (context.maximize(labels[0]).value + form.rank) / 4
        click.echo(f"d = {format_rational(d)}")


def main():
    """Main entry point."""
    cli()


if __name__ == "__main__":
    main()
