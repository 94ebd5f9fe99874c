import argparse
import sys

from bnset.commands.subcommand import EXIT_NEGATIVE, EXIT_SUCCESS, Subcommand
from bnset.crt import lemma_pair, verify_certificate


def _integer(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


@Subcommand.register(
    name="crt",
    description="find integers a, b with a*x = (2b-1)(3b-1) for a nonzero x",
)
class CrtCommand(Subcommand):
    def setup(self) -> None:
        self.parser.add_argument(
            "x",
            type=_integer,
            help="nonzero integer",
        )

    def run(self, args: argparse.Namespace) -> int:
        certificate = lemma_pair(args.x)
        sys.stdout.write(certificate.to_text())
        return EXIT_SUCCESS if verify_certificate(certificate) else EXIT_NEGATIVE
