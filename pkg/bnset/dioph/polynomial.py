from __future__ import annotations

import dataclasses
import logging
from typing import Dict, List

from bnset.core import A, B, Assignment, IntTuple
from bnset.crt import lemma_pair
from bnset.dioph.expression import Const, Expr, Op, Var, square
from bnset.exceptions import ArityMismatchError, MissingVariableError, WitnessError
from bnset.relations import RelationSystem, Triple, extract, find_violation

logger = logging.getLogger(__name__)


def variable_name(index: int) -> str:
    return f"y{index}"


@dataclasses.dataclass(frozen=True)
class DPolynomial:
    """Sum of squares that vanishes exactly at integer counterexamples to membership.

    The leading term ``(a(t_1 - y_1) - (2b - 1)(3b - 1))**2`` is implicit; the
    other terms are indexed by the relations of ``base_tuple``. Relations are
    summed over canonical ``i <= j`` triples, so commutative duplicates appear once.
    """

    base_tuple: IntTuple
    relations: RelationSystem

    @property
    def n(self) -> int:
        return self.base_tuple.n

    @property
    def unit_terms(self) -> List[int]:
        return sorted(self.relations.units)

    @property
    def add_terms(self) -> List[Triple]:
        return sorted(self.relations.adds)

    @property
    def mul_terms(self) -> List[Triple]:
        return sorted(self.relations.muls)

    def variables(self) -> List[str]:
        return [A, B] + [variable_name(index) for index in range(1, self.n + 1)]

    def terms(self) -> List[Expr]:
        a, b = Var(A), Var(B)
        y = {index: Var(variable_name(index)) for index in range(1, self.n + 1)}

        leading = Op(
            "-",
            (
                Op("*", (a, Op("-", (Const(self.base_tuple.at(1)), y[1])))),
                Op(
                    "*",
                    (
                        Op("-", (Op("*", (Const(2), b)), Const(1))),
                        Op("-", (Op("*", (Const(3), b)), Const(1))),
                    ),
                ),
            ),
        )
        terms: List[Expr] = [square(leading)]
        terms.extend(square(Op("-", (y[i], Const(1)))) for i in self.unit_terms)
        terms.extend(square(Op("-", (Op("+", (y[i], y[j])), y[k]))) for i, j, k in self.add_terms)
        terms.extend(square(Op("-", (Op("*", (y[i], y[j])), y[k]))) for i, j, k in self.mul_terms)
        return terms

    def expression(self) -> Expr:
        terms = self.terms()
        if len(terms) == 1:
            return terms[0]
        return Op("+", tuple(terms))


def build_d(t: IntTuple) -> DPolynomial:
    polynomial = DPolynomial(base_tuple=t, relations=extract(t))
    logger.debug("Built D polynomial with %d terms", len(polynomial.relations) + 1)
    return polynomial


def evaluate_d(p: DPolynomial, s: Assignment) -> int:
    missing = [str(key) for key in [A, B, *range(1, p.n + 1)] if key not in s]
    if missing:
        raise MissingVariableError(f"Assignment lacks {', '.join(missing)}")

    a, b = s[A], s[B]
    y: Dict[int, int] = {index: s[index] for index in range(1, p.n + 1)}
    value = (a * (p.base_tuple.at(1) - y[1]) - (2 * b - 1) * (3 * b - 1)) ** 2
    value += sum((y[i] - 1) ** 2 for i in p.unit_terms)
    value += sum((y[i] + y[j] - y[k]) ** 2 for i, j, k in p.add_terms)
    value += sum((y[i] * y[j] - y[k]) ** 2 for i, j, k in p.mul_terms)
    return value


def environment(s: Assignment, n: int) -> Dict[str, int]:
    """Variable names of the emitted expressions bound to the values of ``s``."""
    env = {A: s[A], B: s[B]}
    env.update({variable_name(index): s[index] for index in range(1, n + 1)})
    return env


def witness_to_solution(t: IntTuple, y: IntTuple) -> Assignment:
    if t.n != y.n:
        raise ArityMismatchError(f"Arity mismatch: {t.n} != {y.n}")
    if y.at(1) == t.at(1):
        raise WitnessError(f"y_1 equals t_1 = {t.at(1)}, so y is not a counterexample")
    violation = find_violation(y, extract(t))
    if violation is not None:
        raise WitnessError(f"y violates relation '{violation}'")

    certificate = lemma_pair(t.at(1) - y.at(1))
    return Assignment.from_tuple(y, a=certificate.a, b=certificate.b)
