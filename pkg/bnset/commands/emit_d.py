import argparse
import sys

from bnset.commands.inputs import load_tuple
from bnset.commands.subcommand import EXIT_SUCCESS, Subcommand
from bnset.dioph import build_d, emit_text


@Subcommand.register(
    name="emit-d",
    description="emit the Diophantine equation whose integer zeros are counterexamples for a tuple",
)
class EmitDCommand(Subcommand):
    def setup(self) -> None:
        self.parser.add_argument(
            "file",
            type=str,
            help="tuple file",
        )
        self.parser.add_argument(
            "--format",
            choices=["sexpr", "smt2"],
            default="sexpr",
            help="output format",
        )

    def run(self, args: argparse.Namespace) -> int:
        polynomial = build_d(load_tuple(args.file))
        sys.stdout.write(emit_text(polynomial, args.format))
        return EXIT_SUCCESS
