from bnset.commands import run


def test_emit_d_command_sexpr() -> None:
    outcome = run(["emit-d", "tests/fixtures/two.txt", "--format", "sexpr"])
    assert outcome.exit_code == 0
    assert outcome.report == "(^ (- (* a (- 2 y1)) (* (- (* 2 b) 1) (- (* 3 b) 1))) 2)\n"


def test_emit_d_command_smt2() -> None:
    outcome = run(["emit-d", "tests/fixtures/double.txt", "--format", "smt2"])
    assert outcome.exit_code == 0
    lines = outcome.report.splitlines()
    assert lines[0] == "(set-logic QF_NIA)"
    assert "(declare-const y2 Int)" in lines
    assert lines[-1] == "(check-sat)"


def test_emit_d_command_rejects_unknown_format() -> None:
    assert run(["emit-d", "tests/fixtures/two.txt", "--format", "latex"]).exit_code == 2
