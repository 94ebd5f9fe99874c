from __future__ import annotations

import argparse
import logging
import sys
from contextlib import redirect_stdout
from io import StringIO
from typing import List, NamedTuple, NoReturn, Optional

from bnset import __version__
from bnset.commands.crt import CrtCommand  # noqa: F401
from bnset.commands.emit_d import EmitDCommand  # noqa: F401
from bnset.commands.extract import ExtractCommand  # noqa: F401
from bnset.commands.member import MemberCommand  # noqa: F401
from bnset.commands.paper import PaperCommand  # noqa: F401
from bnset.commands.satisfies import SatisfiesCommand  # noqa: F401
from bnset.commands.search_eq import SearchEqCommand  # noqa: F401
from bnset.commands.subcommand import EXIT_SUCCESS, EXIT_USAGE, Subcommand
from bnset.exceptions import BnsetException

logger = logging.getLogger(__name__)


class CommandOutcome(NamedTuple):
    exit_code: int
    report: str


class _ArgumentParser(argparse.ArgumentParser):
    # one-line diagnostic instead of usage plus error; subparsers inherit this class
    def error(self, message: str) -> NoReturn:
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def create_subcommand(prog: str | None = None) -> Subcommand:
    parser = _ArgumentParser(usage="%(prog)s", prog=prog)
    parser.add_argument(
        "--version",
        action="version",
        version="%(prog)s " + __version__,
    )
    return Subcommand(parser)


def _exit_code(error: SystemExit) -> int:
    if error.code is None:
        return EXIT_SUCCESS
    return error.code if isinstance(error.code, int) else EXIT_USAGE


def run(argv: List[str], prog: Optional[str] = "bnset") -> CommandOutcome:
    """Run one command and collect its standard output.

    Diagnostics go to stderr; input and domain errors become exit code 2.
    """
    app = create_subcommand(prog)
    buffer = StringIO()
    with redirect_stdout(buffer):
        try:
            args = app.parser.parse_args(argv)
            exit_code = app(args)
        except SystemExit as error:
            exit_code = _exit_code(error)
        except (BnsetException, OSError) as error:
            logger.debug("Command failed", exc_info=True)
            print(f"error: {error}", file=sys.stderr)
            exit_code = EXIT_USAGE
    return CommandOutcome(exit_code=exit_code, report=buffer.getvalue())


def main(prog: str | None = None) -> None:
    outcome = run(sys.argv[1:], prog=prog)
    sys.stdout.write(outcome.report)
    sys.exit(outcome.exit_code)
