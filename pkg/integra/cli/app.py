# Library imports
import sys
from pathlib import Path
from typing import List, Optional, Sequence
import typer

try:  # newer typer vendors click and raises its own exception classes
    from typer._click import exceptions as click
except ImportError:
    import click
from rich.text import Text

# Local imports
from integra.cli.command_processor import CommandProcessor
from integra.cli.handlers import registry
from integra.cli.params import Command
from integra.utils.console import configure_logging, make_console
from integra.utils.serialization import dumps_canonical
from integra.utils.settings import get_settings
from integra.utils.types import EXIT_MALFORMED

app = typer.Typer(
    name="integra",
    help="Derive and check integrality certificates over rings and ideal semifiltrations.",
    add_completion=False,
    no_args_is_help=True,
)
processor = CommandProcessor(registry)


def execute(command: Command, verbose: bool = False) -> None:
    console = make_console(get_settings())
    configure_logging(console, verbose)
    outcome = processor.process(command)
    if outcome.diagnostic:
        console.print(Text.assemble(("error: ", "bold red"), outcome.diagnostic))
    if outcome.document is not None:
        text = dumps_canonical(outcome.document)
        if command.output is not None:
            command.output.write_text(text, encoding="utf-8")
        else:
            typer.echo(text, nl=False)
    if outcome.line:
        typer.echo(outcome.line)
    if outcome.exit_code:
        raise typer.Exit(outcome.exit_code)


def _register(verb: str) -> None:
    @app.command(verb, help=registry.describe(verb))
    def command(
        inputs: Optional[List[Path]] = typer.Argument(None, help="Input documents, in the order the verb expects."),
        output: Optional[Path] = typer.Option(None, "--output", "-o", help="Write the derived document here."),
        paranoid: bool = typer.Option(True, "--paranoid/--no-paranoid", help="Re-verify derived certificates."),
        bound: int = typer.Option(6, "--bound", min=1, help="Index bound for sf-validate."),
        degree: Optional[int] = typer.Option(None, "--degree", help="Target degree for pad."),
        lam: Optional[int] = typer.Option(None, "--lambda", min=0, help="Acceleration for rees-accel."),
        backward: bool = typer.Option(False, "--backward", help="Run rees-lift2 or rees-accel in reverse."),
        xy: Optional[str] = typer.Option(None, "--xy", help="JSON payload of xy in A, for joint."),
        verbose: bool = typer.Option(False, "--verbose", "-v", help="Log derivation steps."),
    ) -> None:
        cmd = Command(
            verb=verb,
            inputs=tuple(inputs or ()),
            output=output,
            paranoid=paranoid,
            bound=bound,
            degree=degree,
            lam=lam,
            backward=backward,
            xy=xy,
        )
        execute(cmd, verbose)


for _verb in registry.verbs():
    _register(_verb)


def run(argv: Sequence[str] | None = None) -> int:
    args = list(sys.argv[1:] if argv is None else argv)
    try:
        result = app(args=args, prog_name="integra", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return EXIT_MALFORMED
    except click.Abort:
        return 1
    return result if isinstance(result, int) else 0


def main() -> None:
    sys.exit(run())
