from bnset.commands import run


def test_satisfies_command() -> None:
    outcome = run(["satisfies", "tests/fixtures/double.txt", "tests/fixtures/double_relations.txt"])
    assert outcome.exit_code == 0
    assert outcome.report == "true\n"


def test_satisfies_command_reports_violation() -> None:
    outcome = run(["satisfies", "tests/fixtures/broken_double.txt", "tests/fixtures/double_relations.txt"])
    assert outcome.exit_code == 1
    assert outcome.report == "false\nviolated: A 1 1 2\n"


def test_satisfies_command_arity_mismatch() -> None:
    outcome = run(["satisfies", "tests/fixtures/two.txt", "tests/fixtures/double_relations.txt"])
    assert outcome.exit_code == 2
