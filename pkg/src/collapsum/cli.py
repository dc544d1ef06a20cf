"""Command-line interface.

Exit codes: 0 success, 1 inconsistent instance, 2 parse or usage error,
3 unsupported operation (enumerating an infinite group, integer overflow,
Monge classification outside the integers).  Diagnostics go to stderr.
"""

from __future__ import annotations

import functools
import sys

import click

from . import completion, operators
from .errors import (
    BudgetExceededError,
    CollapsumError,
    DimensionError,
    GroupMismatchError,
    GroupOverflowError,
    ParseError,
    UnsupportedError,
)
from .operators import Flavor
from .textformat import dumps, format_inline, parse_dense, parse_partial

EXIT_INCONSISTENT = 1
EXIT_USAGE = 2
EXIT_UNSUPPORTED = 3


def _exit_code(exc: CollapsumError) -> int:
    if isinstance(exc, (ParseError, DimensionError, GroupMismatchError)):
        return EXIT_USAGE
    if isinstance(exc, (UnsupportedError, GroupOverflowError, BudgetExceededError)):
        return EXIT_UNSUPPORTED
    return EXIT_USAGE


def _guarded(func):
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except CollapsumError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(_exit_code(exc))

    return wrapper


def _read(stream, partial: bool = False):
    text = stream.read()
    try:
        return parse_partial(text) if partial else parse_dense(text)
    except ParseError as exc:
        raise ParseError(f"{stream.name}: {exc}") from None


def _flavor(balanced: bool) -> Flavor:
    return Flavor.BALANCED if balanced else Flavor.UNBALANCED


balanced_option = click.option(
    "--balanced", is_flag=True, help="Use the balanced collapsing sum a - b - c + d."
)


@click.group(no_args_is_help=True)
def cli():
    """Collapsing-sum tomography: preimages and partial-matrix completion."""


@cli.command()
@balanced_option
@click.argument("file", type=click.File("r"))
@_guarded
def collapse(balanced, file):
    """Print the collapsing sum of a dense matrix."""
    a = _read(file)
    click.echo(dumps(operators.collapse_with(a, _flavor(balanced))), nl=False)


@cli.command()
@balanced_option
@click.argument("file", type=click.File("r"))
@_guarded
def preimage(balanced, file):
    """Print a matrix whose collapsing sum is FILE (summed-area construction)."""
    b = _read(file)
    click.echo(dumps(operators.preimage_of(b, _flavor(balanced))), nl=False)


@cli.command()
@click.argument("file", type=click.File("r"))
@_guarded
def canonical(file):
    """Print the class representative with zero first row and column."""
    click.echo(dumps(operators.canonicalize(_read(file))), nl=False)


@cli.command()
@click.argument("file", type=click.File("r"))
@_guarded
def monge(file):
    """Print monge, anti-monge, both or neither."""
    click.echo(operators.monge_class(_read(file)).value)


@cli.command()
@balanced_option
@click.option("--target", "target", required=True, type=click.File("r"), help="Dense target matrix.")
@click.argument("afile", type=click.File("r"))
@_guarded
def check(balanced, target, afile):
    """Decide whether AFILE has a completion collapsing to the target."""
    a = _read(afile, partial=True)
    b = _read(target)
    found = completion.find_inconsistency(a, b, _flavor(balanced))
    if found is None:
        click.echo("consistent")
        return
    cycle, imbalance = found
    click.echo("inconsistent")
    click.echo(f"cycle: {cycle}")
    click.echo(f"imbalance: {imbalance}")
    sys.exit(EXIT_INCONSISTENT)


@cli.command()
@balanced_option
@click.option("--target", "target", required=True, type=click.File("r"), help="Dense target matrix.")
@click.option("--count", "count", is_flag=True, help="Print the exact number of completions.")
@click.option("--all", "all_", is_flag=True, help="Print every completion, one per line.")
@click.option("--verbose", "-v", is_flag=True, help="Report component count and uniqueness on stderr.")
@click.argument("afile", type=click.File("r"))
@_guarded
def complete(balanced, target, count, all_, verbose, afile):
    """Complete AFILE so that its collapsing sum equals the target.

    With --all each completion is printed on one line, rows separated by '; '.
    """
    if count and all_:
        raise click.UsageError("--count and --all are mutually exclusive")
    flavor = _flavor(balanced)
    a = _read(afile, partial=True)
    b = _read(target)
    outcome = completion.complete(a, b, flavor)
    if verbose:
        click.echo(f"components: {outcome.component_count}", err=True)
        click.echo(f"unique: {'yes' if outcome.unique else 'no'}", err=True)

    if all_ and not a.group.is_finite:
        raise UnsupportedError(f"cannot enumerate completions over {a.group.spec()}")
    if not outcome.consistent:
        if count:
            click.echo("0")
        click.echo(f"inconsistent: cycle {outcome.cycle} has imbalance {outcome.imbalance}", err=True)
        sys.exit(EXIT_INCONSISTENT)

    if count:
        n = outcome.completion_count
        click.echo("infinite" if n == completion.INFINITE else str(n))
    elif all_:
        for c in completion.enumerate_completions(a, b, flavor):
            click.echo(format_inline(c))
    else:
        click.echo(dumps(outcome.witness), nl=False)


def main(argv=None):
    cli.main(args=argv, prog_name="collapsum")


if __name__ == "__main__":
    main()
