import itertools
import random

import pytest

from bnset.core import A, B, Assignment, DomainKind, IntTuple
from bnset.dioph import build_d, evaluate_d, witness_to_solution
from bnset.equations import PaperTuple, paper_tuple
from bnset.exceptions import ArityMismatchError, MissingVariableError, WitnessError
from bnset.relations import extract, satisfies
from bnset.solver import find_counterexample

BOUND = 5
AB_RANGE = range(-10, 11)


def test_single_entry_tuple() -> None:
    p = build_d(IntTuple([2]))
    assert p.variables() == ["a", "b", "y1"]
    assert len(p.terms()) == 1
    assert evaluate_d(p, Assignment({A: 1, B: 1, 1: 0})) == 0
    assert evaluate_d(p, Assignment({A: 0, B: 0, 1: 0})) == 1


def test_term_counts_follow_the_relations() -> None:
    p = build_d(paper_tuple(PaperTuple.THEOREM1_20))
    assert p.unit_terms == [20]
    assert len(p.add_terms) == 7
    assert len(p.mul_terms) == 29
    assert len(p.terms()) == 1 + 1 + 7 + 29


def test_witness_to_solution() -> None:
    solution = witness_to_solution(IntTuple([2]), IntTuple([0]))
    assert dict(solution) == {1: 0, A: 1, B: 1}

    t = IntTuple([2, 4])
    solution = witness_to_solution(t, IntTuple([0, 0]))
    assert evaluate_d(build_d(t), solution) == 0


def test_witness_to_solution_rejects_non_witnesses() -> None:
    t = IntTuple([2, 4])
    with pytest.raises(WitnessError):
        witness_to_solution(t, IntTuple([2, 4]))
    with pytest.raises(WitnessError):
        witness_to_solution(t, IntTuple([1, 3]))
    with pytest.raises(ArityMismatchError):
        witness_to_solution(t, IntTuple([0]))


def test_evaluate_d_requires_every_variable() -> None:
    with pytest.raises(MissingVariableError):
        evaluate_d(build_d(IntTuple([2, 4])), Assignment({A: 1, 1: 0, 2: 0}))


def _has_zero_in_box(t: IntTuple) -> bool:
    p = build_d(t)
    for y in itertools.product(range(-BOUND, BOUND + 1), repeat=t.n):
        for a, b in itertools.product(AB_RANGE, AB_RANGE):
            if evaluate_d(p, Assignment.from_tuple(IntTuple(y), a=a, b=b)) == 0:
                return True
    return False


def test_counterexamples_and_zeros_correspond() -> None:
    for n in (1, 2):
        for entries in itertools.product(range(-3, 4), repeat=n):
            t = IntTuple(entries)
            witness = find_counterexample(t, DomainKind.INTEGERS, BOUND)
            if witness is None:
                assert not _has_zero_in_box(t), t
            else:
                solution = witness_to_solution(t, witness.to_tuple(n))
                assert evaluate_d(build_d(t), solution) == 0, t


def test_d_is_non_negative() -> None:
    rng = random.Random(23)
    for _ in range(300):
        t = IntTuple([rng.randint(-5, 5) for _ in range(rng.randint(1, 4))])
        p = build_d(t)
        for _ in range(10):
            y = IntTuple([rng.randint(-20, 20) for _ in range(t.n)])
            s = Assignment.from_tuple(y, a=rng.randint(-50, 50), b=rng.randint(-50, 50))
            assert evaluate_d(p, s) >= 0, (t, s)


def test_zeros_project_to_counterexamples() -> None:
    zeros = 0
    for n in (1, 2):
        for entries in itertools.product(range(-3, 4), repeat=n):
            t = IntTuple(entries)
            p = build_d(t)
            system = extract(t)
            for values in itertools.product(range(-2, 3), repeat=n):
                y = IntTuple(values)
                for a, b in itertools.product(range(-5, 6), repeat=2):
                    if evaluate_d(p, Assignment.from_tuple(y, a=a, b=b)) != 0:
                        continue
                    zeros += 1
                    assert satisfies(y, system), (t, y)
                    assert y.at(1) != t.at(1), (t, y)
                    assert find_counterexample(t, DomainKind.INTEGERS, 2) is not None, t
    assert zeros > 0


def test_worked_examples() -> None:
    assert evaluate_d(build_d(IntTuple([1])), Assignment({A: 0, B: 0, 1: 1})) == 1
    assert evaluate_d(build_d(IntTuple([2])), Assignment({A: 0, B: 0, 1: 2})) == 1

    t = IntTuple([3, 2])
    solution = witness_to_solution(t, IntTuple([0, 0]))
    assert (solution[A], solution[B]) == (5, 2)
    assert evaluate_d(build_d(t), solution) == 0

    with pytest.raises(WitnessError):
        witness_to_solution(IntTuple([1]), IntTuple([1]))
