from __future__ import annotations

import dataclasses
import logging
from enum import Enum, IntEnum
from typing import Dict, Iterable, Iterator, Mapping, Optional, Tuple, Union

from bnset.exceptions import ArityMismatchError, DomainError, TupleFormatError
from bnset.util import DECIMAL_PATTERN, strip_comment

logger = logging.getLogger(__name__)

A = "a"
B = "b"
Variable = Union[int, str]


class DomainKind(Enum):
    INTEGERS = "Z"
    NATURALS = "N"
    POSITIVE = "N1"

    @property
    def floor(self) -> Optional[int]:
        if self is DomainKind.NATURALS:
            return 0
        if self is DomainKind.POSITIVE:
            return 1
        return None

    def contains(self, value: int) -> bool:
        floor = self.floor
        return floor is None or value >= floor

    def values_within(self, bound: int) -> Iterator[int]:
        """Domain values of absolute value at most ``bound`` in one-coordinate shell order."""
        if self is DomainKind.INTEGERS:
            yield 0
            for radius in range(1, bound + 1):
                yield -radius
                yield radius
        else:
            floor = self.floor or 0
            yield from range(floor, bound + 1)


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclasses.dataclass(frozen=True)
class IntTuple:
    entries: Tuple[int, ...]

    def __init__(self, entries: Iterable[int]) -> None:
        values = tuple(entries)
        if not values:
            raise TupleFormatError("A tuple needs at least one entry")
        for value in values:
            if isinstance(value, bool) or not isinstance(value, int):
                raise TupleFormatError(f"Tuple entries must be integers: {value!r}")
        object.__setattr__(self, "entries", values)

    @property
    def n(self) -> int:
        return len(self.entries)

    def at(self, index: int) -> int:
        """1-based access."""
        if not 1 <= index <= self.n:
            raise IndexError(f"index {index} out of range 1..{self.n}")
        return self.entries[index - 1]

    @property
    def shell(self) -> int:
        return max(abs(value) for value in self.entries)

    def in_domain(self, domain: DomainKind) -> bool:
        return all(domain.contains(value) for value in self.entries)

    def check_domain(self, domain: DomainKind) -> None:
        for index, value in enumerate(self.entries, start=1):
            if not domain.contains(value):
                raise DomainError(f"Entry {index} = {value} is not in domain {domain.value}")

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, index: int) -> int:
        return self.entries[index]

    def __str__(self) -> str:
        return format_tuple(self)


def _is_variable(key: object) -> bool:
    if isinstance(key, bool):
        return False
    if isinstance(key, str):
        return key in (A, B)
    return isinstance(key, int) and key >= 1


class Assignment(Mapping[Variable, int]):
    """Partial map from variables (1..n, plus ``A`` and ``B``) to integers."""

    def __init__(self, values: Optional[Mapping[Variable, int]] = None) -> None:
        self._values: Dict[Variable, int] = {}
        for key, value in (values or {}).items():
            if not _is_variable(key):
                raise KeyError(f"Invalid variable: {key!r}")
            if isinstance(value, bool) or not isinstance(value, int):
                raise TypeError(f"Value of {key!r} must be an integer: {value!r}")
            self._values[key] = value

    @classmethod
    def from_tuple(cls, t: IntTuple, a: Optional[int] = None, b: Optional[int] = None) -> Assignment:
        values: Dict[Variable, int] = {index: value for index, value in enumerate(t, start=1)}
        if a is not None:
            values[A] = a
        if b is not None:
            values[B] = b
        return cls(values)

    def __getitem__(self, key: Variable) -> int:
        return self._values[key]

    def __iter__(self) -> Iterator[Variable]:
        return iter(self._values)

    def __len__(self) -> int:
        return len(self._values)

    def __repr__(self) -> str:
        items = ", ".join(f"{key}↦{value}" for key, value in self._values.items())
        return f"Assignment({{{items}}})"

    def is_total(self, n: int) -> bool:
        return all(index in self._values for index in range(1, n + 1))

    def to_tuple(self, n: int) -> IntTuple:
        missing = [index for index in range(1, n + 1) if index not in self._values]
        if missing:
            raise KeyError(f"Assignment is not total over 1..{n}, missing {missing}")
        return IntTuple(tuple(self._values[index] for index in range(1, n + 1)))


def shell_key(t: IntTuple) -> Tuple[int, Tuple[int, ...]]:
    return (t.shell, t.entries)


def shell_compare(t: IntTuple, u: IntTuple) -> Ordering:
    if t.n != u.n:
        raise ArityMismatchError(f"Cannot compare tuples of arity {t.n} and {u.n}")
    left, right = shell_key(t), shell_key(u)
    if left < right:
        return Ordering.LESS
    if left > right:
        return Ordering.GREATER
    return Ordering.EQUAL


def iter_shell(n: int, radius: int, domain: DomainKind) -> Iterator[Tuple[int, ...]]:
    """Raw tuples of ``domain^n`` whose max-absolute entry is exactly ``radius``, lexicographically."""
    floor = domain.floor
    low = -radius if floor is None else max(floor, -radius)
    values = range(low, radius + 1)

    def _extend(position: int, reached: bool) -> Iterator[Tuple[int, ...]]:
        if position == n:
            yield ()
            return
        last = position == n - 1
        for value in values:
            hit = reached or abs(value) == radius
            if last and not hit:
                continue
            for rest in _extend(position + 1, hit):
                yield (value,) + rest

    yield from _extend(0, False)


def enumerate_tuples(n: int, domain: DomainKind, max_shell: Optional[int] = None) -> Iterator[IntTuple]:
    """Every tuple of ``domain^n`` exactly once, in increasing shell order.

    The stream is unbounded unless ``max_shell`` is given.
    """
    if n < 1:
        raise ValueError(f"Arity must be positive: {n}")
    radius = 0
    while max_shell is None or radius <= max_shell:
        for entries in iter_shell(n, radius, domain):
            yield IntTuple(entries)
        radius += 1


def parse_tuple_text(text: str) -> IntTuple:
    values = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        for token in strip_comment(line).split():
            if not DECIMAL_PATTERN.fullmatch(token):
                raise TupleFormatError(f"line {lineno}: not a decimal integer: {token!r}")
            values.append(int(token))
    if not values:
        raise TupleFormatError("no integers found in tuple text")
    logger.debug("Parsed tuple of arity %d", len(values))
    return IntTuple(tuple(values))


def format_tuple(t: IntTuple) -> str:
    return " ".join(str(value) for value in t)
