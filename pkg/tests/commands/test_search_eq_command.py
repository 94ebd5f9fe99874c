from bnset.commands import run


def test_search_eq_command() -> None:
    outcome = run(["search-eq", "--name", "q1", "--bound", "200"])
    assert outcome.exit_code == 0
    assert outcome.report == "132 143 164\n143 132 164\n"


def test_search_eq_command_threads() -> None:
    single = run(["search-eq", "--name", "sq1", "--bound", "20"])
    sharded = run(["search-eq", "--name", "sq1", "--bound", "20", "--threads", "4"])
    assert single == sharded
    assert single.report == "10 13 14\n13 10 14\n"


def test_search_eq_command_requires_name() -> None:
    assert run(["search-eq", "--bound", "10"]).exit_code == 2
