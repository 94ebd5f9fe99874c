from __future__ import annotations

from typing import List

from bnset.dioph.emitter import Emitter
from bnset.dioph.expression import Const, Expr, Var
from bnset.dioph.polynomial import DPolynomial

LOGIC = "QF_NIA"
SQUARE_BINDER = "sq"


def render_smt2(expr: Expr) -> str:
    if isinstance(expr, Const):
        return str(expr.value) if expr.value >= 0 else f"(- {-expr.value})"
    if isinstance(expr, Var):
        return expr.name
    if expr.symbol == "^":
        # SMT-LIB has no power operator; bind the base once and multiply.
        base = render_smt2(expr.args[0])
        return f"(let (({SQUARE_BINDER} {base})) (* {SQUARE_BINDER} {SQUARE_BINDER}))"
    return "(" + " ".join([expr.symbol, *(render_smt2(arg) for arg in expr.args)]) + ")"


@Emitter.register(["smt2", "smtlib2"])
class Smt2Emitter(Emitter):
    """SMT-LIB2 script asserting that the polynomial vanishes over the integers."""

    def emit(self, polynomial: DPolynomial) -> str:
        lines: List[str] = [f"(set-logic {LOGIC})"]
        lines.extend(f"(declare-const {name} Int)" for name in polynomial.variables())
        lines.append(f"(assert (= {render_smt2(polynomial.expression())} 0))")
        lines.append("(check-sat)")
        return "\n".join(lines) + "\n"
