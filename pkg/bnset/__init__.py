from importlib.metadata import version

from bnset.config import Config
from bnset.core import Assignment, DomainKind, IntTuple, enumerate_tuples, parse_tuple_text, shell_compare
from bnset.crt import CrtCertificate, lemma_pair, verify_certificate
from bnset.equations import NamedEquation, PaperTuple, complete_witness, paper_tuple, search_equation
from bnset.relations import RelationSystem, extract, extract_display, satisfies, subset
from bnset.solver import certify_bounded, enumerate_solutions, find_counterexample, propagate

__version__ = version("bnset")
__all__ = [
    "Assignment",
    "Config",
    "CrtCertificate",
    "DomainKind",
    "IntTuple",
    "NamedEquation",
    "PaperTuple",
    "RelationSystem",
    "certify_bounded",
    "complete_witness",
    "enumerate_solutions",
    "enumerate_tuples",
    "extract",
    "extract_display",
    "find_counterexample",
    "lemma_pair",
    "paper_tuple",
    "parse_tuple_text",
    "propagate",
    "satisfies",
    "search_equation",
    "shell_compare",
    "subset",
    "verify_certificate",
]
