from bnset.dioph.emitter import Emitter, emit_text  # noqa: F401
from bnset.dioph.expression import Const, Expr, Op, Var, evaluate_expression, parse_sexpr  # noqa: F401
from bnset.dioph.polynomial import (  # noqa: F401
    DPolynomial,
    build_d,
    environment,
    evaluate_d,
    variable_name,
    witness_to_solution,
)
from bnset.dioph.sexpr import SexprEmitter  # noqa: F401
from bnset.dioph.smt2 import Smt2Emitter  # noqa: F401
