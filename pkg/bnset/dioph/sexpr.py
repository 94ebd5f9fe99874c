from __future__ import annotations

from bnset.dioph.emitter import Emitter
from bnset.dioph.expression import Const, Expr, Var
from bnset.dioph.polynomial import DPolynomial


def render_sexpr(expr: Expr) -> str:
    if isinstance(expr, Const):
        return str(expr.value)
    if isinstance(expr, Var):
        return expr.name
    return "(" + " ".join([expr.symbol, *(render_sexpr(arg) for arg in expr.args)]) + ")"


@Emitter.register(["sexpr"])
class SexprEmitter(Emitter):
    """Single prefix expression over ``+ - * ^``."""

    def emit(self, polynomial: DPolynomial) -> str:
        return render_sexpr(polynomial.expression()) + "\n"
