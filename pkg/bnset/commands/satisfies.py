import argparse

from bnset.commands.inputs import load_tuple
from bnset.commands.subcommand import EXIT_NEGATIVE, EXIT_SUCCESS, Subcommand
from bnset.relations import find_violation, loads_relations
from bnset.util import read_text


@Subcommand.register(
    name="satisfies",
    description="check whether a tuple satisfies a relation system",
)
class SatisfiesCommand(Subcommand):
    def setup(self) -> None:
        self.parser.add_argument(
            "tuple_file",
            type=str,
            help="tuple file",
        )
        self.parser.add_argument(
            "relations_file",
            type=str,
            help="relation file with 'U i', 'A i j k' and 'M i j k' lines",
        )

    def run(self, args: argparse.Namespace) -> int:
        y = load_tuple(args.tuple_file)
        system = loads_relations(read_text(args.relations_file), y.n)

        violation = find_violation(y, system)
        if violation is None:
            print("true")
            return EXIT_SUCCESS
        print("false")
        print(f"violated: {violation}")
        return EXIT_NEGATIVE
