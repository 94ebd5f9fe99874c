import argparse
import logging
import sys

from bnset.commands.inputs import DOMAIN_CHOICES, add_search_arguments, load_tuple, non_negative_int
from bnset.commands.subcommand import EXIT_NEGATIVE, EXIT_SUCCESS, Subcommand
from bnset.config import Config
from bnset.core import DomainKind
from bnset.solver import certify_bounded

logger = logging.getLogger(__name__)


@Subcommand.register(
    name="member",
    description="search for counterexamples to membership of a tuple in B_n(K) up to a bound",
    epilog="a search without counterexamples is evidence, not a proof of membership",
)
class MemberCommand(Subcommand):
    def setup(self) -> None:
        self.parser.add_argument(
            "file",
            type=str,
            help="tuple file",
        )
        self.parser.add_argument(
            "--domain",
            choices=DOMAIN_CHOICES,
            default=DomainKind.INTEGERS.value,
            help="Z (integers), N (non-negative integers) or N1 (positive integers)",
        )
        add_search_arguments(self.parser)
        self.parser.add_argument(
            "--limit",
            type=non_negative_int,
            default=None,
            help="print at most this many counterexamples",
        )

    def run(self, args: argparse.Namespace) -> int:
        config = Config.load(threads=args.threads, bound=args.bound, solution_limit=args.limit)
        t = load_tuple(args.file)
        domain = DomainKind(args.domain)

        logger.info("Searching counterexamples for a %d-tuple in %s up to %d", t.n, domain.value, config.bound)
        report = certify_bounded(t, domain, config.bound, threads=config.threads)
        sys.stdout.write(report.to_text(limit=config.solution_limit))
        return EXIT_NEGATIVE if report.counterexamples else EXIT_SUCCESS
