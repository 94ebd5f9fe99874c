import argparse

from bnset.commands.inputs import add_search_arguments
from bnset.commands.subcommand import EXIT_SUCCESS, Subcommand
from bnset.config import Config
from bnset.equations import NamedEquation, search_equation


@Subcommand.register(
    name="search-eq",
    description="list the solutions of a quartic equation with all variables up to a bound",
    epilog="the listing is exhaustive within the bound only",
)
class SearchEqCommand(Subcommand):
    def setup(self) -> None:
        self.parser.add_argument(
            "--name",
            choices=[equation.value for equation in NamedEquation],
            required=True,
            help="q1: x^2(x+1)^2+y^2(y+1)^2=z^2(z+1)^2, "
            "q2: (x+14)^2(x+16)^2+y^2(y+2)^2=z^2(z+2)^2, "
            "sq1: (x^2-1)^2+(y^2-1)^2=(z^2-1)^2",
        )
        add_search_arguments(self.parser)

    def run(self, args: argparse.Namespace) -> int:
        config = Config.load(threads=args.threads, bound=args.bound)
        equation = NamedEquation(args.name)
        bound = max(config.bound, equation.domain_floor)

        for x, y, z in search_equation(equation, bound, threads=config.threads):
            print(f"{x} {y} {z}")
        return EXIT_SUCCESS
