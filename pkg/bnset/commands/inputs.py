from __future__ import annotations

import argparse
from os import PathLike

from bnset.core import DomainKind, IntTuple, parse_tuple_text
from bnset.util import read_text

DOMAIN_CHOICES = [domain.value for domain in DomainKind]


def load_tuple(path: str | PathLike) -> IntTuple:
    return parse_tuple_text(read_text(path))


def non_negative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {value}")
    return value


def positive_int(text: str) -> int:
    value = non_negative_int(text)
    if value == 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def add_search_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--bound",
        type=non_negative_int,
        default=None,
        help="bound on the absolute value of searched variables (default: config)",
    )
    parser.add_argument(
        "--threads",
        type=positive_int,
        default=None,
        help="number of worker threads (default: config, 1)",
    )
