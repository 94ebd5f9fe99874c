import itertools
import random

import pytest

from bnset.core import (
    A,
    B,
    Assignment,
    DomainKind,
    IntTuple,
    Ordering,
    enumerate_tuples,
    format_tuple,
    iter_shell,
    parse_tuple_text,
    shell_compare,
    shell_key,
)
from bnset.exceptions import ArityMismatchError, DomainError, TupleFormatError


def test_int_tuple_rejects_empty_and_non_integers() -> None:
    with pytest.raises(TupleFormatError):
        IntTuple([])
    with pytest.raises(TupleFormatError):
        IntTuple([1, 2.5])  # type: ignore[list-item]
    with pytest.raises(TupleFormatError):
        IntTuple([True])


def test_int_tuple_accessors() -> None:
    t = IntTuple([3, -7, 0])
    assert t.n == 3
    assert t.at(1) == 3
    assert t.at(3) == 0
    assert t.shell == 7
    assert list(t) == [3, -7, 0]
    with pytest.raises(IndexError):
        t.at(0)


def test_domain_membership() -> None:
    assert IntTuple([0, 5]).in_domain(DomainKind.NATURALS)
    assert not IntTuple([0, 5]).in_domain(DomainKind.POSITIVE)
    assert IntTuple([-4]).in_domain(DomainKind.INTEGERS)
    with pytest.raises(DomainError):
        IntTuple([1, -1]).check_domain(DomainKind.NATURALS)


def test_values_within() -> None:
    assert list(DomainKind.INTEGERS.values_within(2)) == [0, -1, 1, -2, 2]
    assert list(DomainKind.NATURALS.values_within(2)) == [0, 1, 2]
    assert list(DomainKind.POSITIVE.values_within(2)) == [1, 2]
    assert list(DomainKind.POSITIVE.values_within(0)) == []


def test_shell_compare() -> None:
    assert shell_compare(IntTuple([2, 0]), IntTuple([0, -1])) is Ordering.GREATER
    assert shell_compare(IntTuple([-1, 1]), IntTuple([1, -1])) is Ordering.LESS
    assert shell_compare(IntTuple([4]), IntTuple([4])) is Ordering.EQUAL
    with pytest.raises(ArityMismatchError):
        shell_compare(IntTuple([1]), IntTuple([1, 1]))


def test_first_tuples_over_integers() -> None:
    first = [t.entries for t in itertools.islice(enumerate_tuples(2, DomainKind.INTEGERS), 10)]
    assert first == [
        (0, 0),
        (-1, -1),
        (-1, 0),
        (-1, 1),
        (0, -1),
        (0, 1),
        (1, -1),
        (1, 0),
        (1, 1),
        (-2, -2),
    ]


@pytest.mark.parametrize("n, radius", [(1, 50), (2, 5), (3, 2)])
def test_enumeration_matches_sorted_reference(n: int, radius: int) -> None:
    produced = list(itertools.islice(enumerate_tuples(n, DomainKind.INTEGERS), 100))
    assert len(set(produced)) == 100

    box = range(-radius, radius + 1)
    reference = sorted((IntTuple(entries) for entries in itertools.product(box, repeat=n)), key=shell_key)
    assert produced == reference[:100]


def test_enumeration_over_naturals_is_exact() -> None:
    produced = list(enumerate_tuples(2, DomainKind.POSITIVE, max_shell=3))
    expected = sorted((IntTuple(entries) for entries in itertools.product(range(1, 4), repeat=2)), key=shell_key)
    assert produced == expected


def test_iter_shell_sizes() -> None:
    for radius in range(4):
        size = sum(1 for _ in iter_shell(3, radius, DomainKind.INTEGERS))
        assert size == (2 * radius + 1) ** 3 - max(2 * radius - 1, 0) ** 3


def test_shell_order_is_total_on_random_tuples() -> None:
    rng = random.Random(13)
    tuples = [IntTuple([rng.randint(-9, 9) for _ in range(3)]) for _ in range(200)]
    ordered = sorted(tuples, key=shell_key)
    for left, right in zip(ordered, ordered[1:]):
        assert shell_compare(left, right) is not Ordering.GREATER


def test_parse_tuple_text() -> None:
    t = parse_tuple_text("# header\n 12  -4\n\n7 # trailing\n")
    assert t.entries == (12, -4, 7)
    assert format_tuple(t) == "12 -4 7"

    with pytest.raises(TupleFormatError, match="line 2"):
        parse_tuple_text("3\n-3 x\n")
    with pytest.raises(TupleFormatError):
        parse_tuple_text("# nothing here\n")


def test_assignment() -> None:
    s = Assignment.from_tuple(IntTuple([5, 6]), a=1, b=-2)
    assert s[1] == 5
    assert s[A] == 1
    assert s[B] == -2
    assert s.is_total(2)
    assert not s.is_total(3)
    assert s.to_tuple(2) == IntTuple([5, 6])

    with pytest.raises(KeyError):
        Assignment({0: 1})
    with pytest.raises(KeyError):
        Assignment({"c": 1})
    with pytest.raises(KeyError):
        Assignment({1: 4}).to_tuple(2)


def test_shell_compare_same_shell_uses_entries() -> None:
    assert shell_compare(IntTuple([1, -2]), IntTuple([-2, 1])) is Ordering.GREATER
    assert shell_compare(IntTuple([0]), IntTuple([1])) is Ordering.LESS


def test_first_tuples_of_one_coordinate() -> None:
    integers = [t.entries for t in itertools.islice(enumerate_tuples(1, DomainKind.INTEGERS), 5)]
    assert integers == [(0,), (-1,), (1,), (-2,), (2,)]
    positives = [t.entries for t in itertools.islice(enumerate_tuples(1, DomainKind.POSITIVE), 3)]
    assert positives == [(1,), (2,), (3,)]


def test_parse_tuple_text_accepts_only_decimal_integers() -> None:
    assert parse_tuple_text("-12 0 7\n").entries == (-12, 0, 7)
    for token in ("1_000", "+5", "٣"):
        with pytest.raises(TupleFormatError, match="not a decimal integer"):
            parse_tuple_text(f"1 {token}\n")


@pytest.mark.parametrize(
    "n, domain, values",
    [
        (1, DomainKind.INTEGERS, range(-4, 5)),
        (2, DomainKind.INTEGERS, range(-4, 5)),
        (3, DomainKind.INTEGERS, range(-4, 5)),
        (3, DomainKind.NATURALS, range(0, 5)),
        (3, DomainKind.POSITIVE, range(1, 5)),
    ],
)
def test_enumeration_is_a_bijection_up_to_shell_four(n: int, domain: DomainKind, values: range) -> None:
    produced = list(enumerate_tuples(n, domain, max_shell=4))
    assert len(set(produced)) == len(produced)
    expected = sorted((IntTuple(entries) for entries in itertools.product(values, repeat=n)), key=shell_key)
    assert produced == expected
