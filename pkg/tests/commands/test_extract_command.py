import tempfile
from pathlib import Path

from bnset.commands import run
from bnset.equations import PaperTuple, paper_tuple


def test_extract_command() -> None:
    outcome = run(["extract", "tests/fixtures/double.txt"])
    assert outcome.exit_code == 0
    assert outcome.report == "A 1 1 2\nM 1 1 2\n"


def test_extract_command_paper_style() -> None:
    with tempfile.TemporaryDirectory() as tempdir:
        path = Path(tempdir) / "t2.txt"
        path.write_text("\n".join(str(value) for value in paper_tuple(PaperTuple.THEOREM2_17)) + "\n")

        outcome = run(["extract", str(path), "--paper-style"])

    assert outcome.exit_code == 0
    lines = outcome.report.splitlines()
    assert lines[5] == "[13, 14, 6]"
    assert lines[8] == "the triples [i,j,k] with i=<j<17 and A[i]*A[j]=A[k]"


def test_extract_command_errors() -> None:
    assert run(["extract", "tests/fixtures/malformed.txt"]).exit_code == 2
    assert run(["extract", "tests/fixtures/missing.txt"]).exit_code == 2
    assert run(["unknown"]).exit_code == 2


def test_version() -> None:
    outcome = run(["--version"])
    assert outcome.exit_code == 0
    assert outcome.report == "bnset 0.1.0\n"


def test_extract_command_rejects_invalid_utf8() -> None:
    outcome = run(["extract", "tests/fixtures/not_utf8.txt"])
    assert outcome.exit_code == 2
    assert outcome.report == ""
