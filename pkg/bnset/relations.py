from __future__ import annotations

import dataclasses
import logging
from collections import defaultdict
from enum import Enum
from typing import Dict, FrozenSet, Iterator, List, NamedTuple, Optional, Sequence, Set, Tuple

from bnset.core import IntTuple
from bnset.exceptions import ArityMismatchError, RelationFormatError
from bnset.util import DECIMAL_PATTERN, strip_comment

logger = logging.getLogger(__name__)

Triple = Tuple[int, int, int]


class RelationKind(Enum):
    UNIT = "U"
    ADD = "A"
    MUL = "M"


class Relation(NamedTuple):
    kind: RelationKind
    indices: Tuple[int, ...]

    def holds(self, values: Sequence[int]) -> bool:
        """Check the relation against 0-based ``values``."""
        if self.kind is RelationKind.UNIT:
            return values[self.indices[0] - 1] == 1
        i, j, k = self.indices
        if self.kind is RelationKind.ADD:
            return values[i - 1] + values[j - 1] == values[k - 1]
        return values[i - 1] * values[j - 1] == values[k - 1]

    def __str__(self) -> str:
        return " ".join([self.kind.value, *(str(index) for index in self.indices)])


def _canonical(i: int, j: int, k: int) -> Triple:
    return (i, j, k) if i <= j else (j, i, k)


@dataclasses.dataclass(frozen=True)
class RelationSystem:
    n: int
    units: FrozenSet[int] = frozenset()
    adds: FrozenSet[Triple] = frozenset()
    muls: FrozenSet[Triple] = frozenset()

    def __post_init__(self) -> None:
        if self.n < 1:
            raise RelationFormatError(f"Arity must be positive: {self.n}")
        object.__setattr__(self, "units", frozenset(self.units))
        object.__setattr__(self, "adds", frozenset(_canonical(*triple) for triple in self.adds))
        object.__setattr__(self, "muls", frozenset(_canonical(*triple) for triple in self.muls))
        for relation in self:
            for index in relation.indices:
                if not 1 <= index <= self.n:
                    raise RelationFormatError(f"Index {index} of '{relation}' is outside 1..{self.n}")

    def __iter__(self) -> Iterator[Relation]:
        """Relations in serialization order: units, additions, products."""
        for index in sorted(self.units):
            yield Relation(RelationKind.UNIT, (index,))
        for triple in sorted(self.adds):
            yield Relation(RelationKind.ADD, triple)
        for triple in sorted(self.muls):
            yield Relation(RelationKind.MUL, triple)

    def __len__(self) -> int:
        return len(self.units) + len(self.adds) + len(self.muls)

    def violations(self, y: IntTuple) -> List[Relation]:
        _check_arity(y.n, self.n)
        return [relation for relation in self if not relation.holds(y.entries)]


def _check_arity(left: int, right: int) -> None:
    if left != right:
        raise ArityMismatchError(f"Arity mismatch: {left} != {right}")


def extract(t: IntTuple) -> RelationSystem:
    positions: Dict[int, List[int]] = defaultdict(list)
    for index, value in enumerate(t, start=1):
        positions[value].append(index)

    units = frozenset(positions.get(1, ()))
    adds: Set[Triple] = set()
    muls: Set[Triple] = set()
    for i in range(1, t.n + 1):
        for j in range(i, t.n + 1):
            for k in positions.get(t.at(i) + t.at(j), ()):
                adds.add((i, j, k))
            for k in positions.get(t.at(i) * t.at(j), ()):
                muls.add((i, j, k))

    system = RelationSystem(n=t.n, units=units, adds=frozenset(adds), muls=frozenset(muls))
    logger.debug(
        "Extracted %d units, %d additions, %d products from a %d-tuple",
        len(system.units),
        len(system.adds),
        len(system.muls),
        t.n,
    )
    return system


def extract_display(t: IntTuple, skip_last_in_products: bool = False) -> Tuple[List[Triple], List[Triple]]:
    """Relation triples in the order of the reference loops.

    ``i`` ascends in the outer loop, ``j`` from ``i`` upwards and ``k`` over the
    whole range. With ``skip_last_in_products`` the products only use factors
    with index below ``n``, which hides the trivial ``x * 1 = x`` triples.
    """
    n = t.n
    additions: List[Triple] = []
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            for k in range(1, n + 1):
                if t.at(i) + t.at(j) == t.at(k):
                    additions.append((i, j, k))

    last_factor = n - 1 if skip_last_in_products else n
    products: List[Triple] = []
    for i in range(1, last_factor + 1):
        for j in range(i, last_factor + 1):
            for k in range(1, n + 1):
                if t.at(i) * t.at(j) == t.at(k):
                    products.append((i, j, k))

    return additions, products


def satisfies(y: IntTuple, r: RelationSystem) -> bool:
    _check_arity(y.n, r.n)
    return all(relation.holds(y.entries) for relation in r)


def subset(r1: RelationSystem, r2: RelationSystem) -> bool:
    _check_arity(r1.n, r2.n)
    return r1.units <= r2.units and r1.adds <= r2.adds and r1.muls <= r2.muls


def dumps_relations(r: RelationSystem) -> str:
    return "".join(f"{relation}\n" for relation in r)


def loads_relations(text: str, n: int) -> RelationSystem:
    units: Set[int] = set()
    adds: Set[Triple] = set()
    muls: Set[Triple] = set()
    for lineno, line in enumerate(text.splitlines(), start=1):
        content = strip_comment(line)
        if not content:
            continue
        kind, *arguments = content.split()
        if not all(DECIMAL_PATTERN.fullmatch(argument) for argument in arguments):
            raise RelationFormatError(f"line {lineno}: non-integer index in {content!r}")
        indices = [int(argument) for argument in arguments]
        if kind == RelationKind.UNIT.value and len(indices) == 1:
            units.add(indices[0])
        elif kind in (RelationKind.ADD.value, RelationKind.MUL.value) and len(indices) == 3:
            target = adds if kind == RelationKind.ADD.value else muls
            target.add(_canonical(indices[0], indices[1], indices[2]))
        else:
            raise RelationFormatError(f"line {lineno}: malformed relation {content!r}")
    return RelationSystem(n=n, units=frozenset(units), adds=frozenset(adds), muls=frozenset(muls))


def find_violation(y: IntTuple, r: RelationSystem) -> Optional[Relation]:
    violations = r.violations(y)
    return violations[0] if violations else None
