import argparse
import sys

from bnset.commands.inputs import load_tuple
from bnset.commands.subcommand import EXIT_SUCCESS, Subcommand
from bnset.equations import format_display
from bnset.relations import dumps_relations, extract, extract_display


@Subcommand.register(
    name="extract",
    description="print the relation system satisfied by a tuple",
)
class ExtractCommand(Subcommand):
    def setup(self) -> None:
        self.parser.add_argument(
            "file",
            type=str,
            help="tuple file (decimal integers, '#' comments, '-' for stdin)",
        )
        self.parser.add_argument(
            "--paper-style",
            action="store_true",
            help="print the triple listings in loop order, products without the last index",
        )

    def run(self, args: argparse.Namespace) -> int:
        t = load_tuple(args.file)
        if args.paper_style:
            additions, products = extract_display(t, skip_last_in_products=True)
            sys.stdout.write(format_display(t.n, additions, products, skip_last_in_products=True))
        else:
            sys.stdout.write(dumps_relations(extract(t)))
        return EXIT_SUCCESS
