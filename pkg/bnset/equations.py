from __future__ import annotations

import logging
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from enum import Enum
from typing import Callable, Dict, List, Set, Tuple

from bnset.core import Assignment, IntTuple
from bnset.crt import lemma_pair
from bnset.exceptions import EquationError
from bnset.relations import Triple, extract, satisfies

logger = logging.getLogger(__name__)

Solution = Tuple[int, int, int]
Side = Callable[[int], int]


def _q1(t: int) -> int:
    return t * t * (t + 1) * (t + 1)


def _shifted_x(t: int) -> int:
    return (t + 14) ** 2 * (t + 16) ** 2


def _shifted(t: int) -> int:
    return t * t * (t + 2) * (t + 2)


def _squares_minus_one(t: int) -> int:
    return (t * t - 1) ** 2


class NamedEquation(Enum):
    """Quartics of the form ``f(x) + g(y) == h(z)``."""

    SIERPINSKI_Q1 = "q1"
    SHIFTED_Q2 = "q2"
    SQUARES_M1 = "sq1"

    @property
    def domain_floor(self) -> int:
        return 2 if self is NamedEquation.SQUARES_M1 else 1

    @property
    def sides(self) -> Tuple[Side, Side, Side]:
        if self is NamedEquation.SIERPINSKI_Q1:
            return _q1, _q1, _q1
        if self is NamedEquation.SHIFTED_Q2:
            return _shifted_x, _shifted, _shifted
        return _squares_minus_one, _squares_minus_one, _squares_minus_one

    @property
    def display(self) -> str:
        return {
            NamedEquation.SIERPINSKI_Q1: "x^2(x+1)^2 + y^2(y+1)^2 = z^2(z+1)^2",
            NamedEquation.SHIFTED_Q2: "(x+14)^2(x+16)^2 + y^2(y+2)^2 = z^2(z+2)^2",
            NamedEquation.SQUARES_M1: "(x^2-1)^2 + (y^2-1)^2 = (z^2-1)^2",
        }[self]

    def holds(self, x: int, y: int, z: int) -> bool:
        f, g, h = self.sides
        return f(x) + g(y) == h(z)


def search_equation(eq: NamedEquation, bound: int, threads: int = 1) -> List[Solution]:
    """All solutions with every variable in ``[domain_floor, bound]``, sorted.

    The right-hand side is tabulated once, then every ``(x, y)`` pair is probed.
    """
    floor = eq.domain_floor
    if bound < floor:
        raise ValueError(f"bound must be at least {floor}: {bound}")
    f, g, h = eq.sides

    table: Dict[int, List[int]] = defaultdict(list)
    for z in range(floor, bound + 1):
        table[h(z)].append(z)
    right = [g(y) for y in range(floor, bound + 1)]

    def _probe(xs: List[int]) -> Set[Solution]:
        found: Set[Solution] = set()
        for x in xs:
            left = f(x)
            for offset, value in enumerate(right):
                for z in table.get(left + value, ()):
                    found.add((x, floor + offset, z))
        return found

    xs = list(range(floor, bound + 1))
    shards = [xs[offset::threads] for offset in range(threads)]
    if threads == 1:
        results = [_probe(shards[0])]
    else:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            results = list(executor.map(_probe, shards))

    solutions = sorted({solution for found in results for solution in found})
    logger.debug("%s up to %d: %d solution(s)", eq.name, bound, len(solutions))
    return solutions


class PaperTuple(Enum):
    THEOREM1_20 = "t1"
    THEOREM2_17 = "t2"
    B13_POS = "b13"
    B15_NAT = "b15"

    @property
    def equation(self) -> NamedEquation:
        return NamedEquation.SHIFTED_Q2 if self is PaperTuple.THEOREM2_17 else NamedEquation.SIERPINSKI_Q1

    @property
    def reference_solution(self) -> Solution:
        return (250, 286, 328) if self is PaperTuple.THEOREM2_17 else (132, 143, 164)


def _pronic(t: int) -> int:
    return t * (t + 1)


def _theorem1_slots(x: int, y: int, z: int) -> List[int]:
    product = _pronic(x) * _pronic(y)
    certificate = lemma_pair(product)
    b = certificate.b
    return [
        _pronic(z),
        _pronic(z) ** 2,
        z,
        z + 1,
        x,
        x + 1,
        _pronic(x),
        _pronic(x) ** 2,
        y,
        y + 1,
        _pronic(y),
        _pronic(y) ** 2,
        product,
        b,
        2 * b,
        2 * b - 1,
        3 * b - 1,
        (2 * b - 1) * (3 * b - 1),
        certificate.a,
        1,
    ]


def _theorem2_slots(x: int, y: int, z: int) -> List[int]:
    def block(u: int, v: int) -> List[int]:
        return [u, v, u * v, (u * v) ** 2]

    return [*block(z, z + 2), *block(x + 14, x + 16), *block(y, y + 2), x, 16, 4, 2, 1]


def _b13_slots(x: int, y: int, z: int) -> List[int]:
    def block(u: int) -> List[int]:
        return [u, u + 1, _pronic(u), _pronic(u) ** 2]

    return [*block(z), *block(x), *block(y), 1]


def _b15_slots(x: int, y: int, z: int) -> List[int]:
    def block(u: int) -> List[int]:
        return [u - 1, u, u + 1, _pronic(u), _pronic(u) ** 2]

    return [z, z + 1, _pronic(z), _pronic(z) ** 2, *block(x), *block(y), 1]


_SLOTS: Dict[PaperTuple, Callable[[int, int, int], List[int]]] = {
    PaperTuple.THEOREM1_20: _theorem1_slots,
    PaperTuple.THEOREM2_17: _theorem2_slots,
    PaperTuple.B13_POS: _b13_slots,
    PaperTuple.B15_NAT: _b15_slots,
}


def paper_tuple(which: PaperTuple) -> IntTuple:
    return IntTuple(_SLOTS[which](*which.reference_solution))


def complete_witness(which: PaperTuple, x: int, y: int, z: int) -> Assignment:
    """Turn a solution of the tuple's equation into a tuple satisfying its relation system."""
    equation = which.equation
    if not equation.holds(x, y, z):
        raise EquationError(f"({x}, {y}, {z}) does not solve {equation.display}")
    if which is PaperTuple.THEOREM1_20 and _pronic(x) * _pronic(y) == 0:
        raise EquationError(f"x(x+1)y(y+1) vanishes at ({x}, {y})")

    witness = IntTuple(_SLOTS[which](x, y, z))
    logger.debug("Completed %s witness from (%d, %d, %d)", which.name, x, y, z)
    return Assignment.from_tuple(witness)


def complete_witness_theorem1(x: int, y: int, z: int) -> Assignment:
    return complete_witness(PaperTuple.THEOREM1_20, x, y, z)


def bridge_witnesses(which: PaperTuple, bound: int, threads: int = 1) -> List[IntTuple]:
    """Witnesses built from every equation solution up to ``bound``.

    Each one satisfies the relation system of ``paper_tuple(which)``.
    """
    system = extract(paper_tuple(which))
    witnesses: List[IntTuple] = []
    for x, y, z in search_equation(which.equation, bound, threads):
        witness = complete_witness(which, x, y, z).to_tuple(system.n)
        assert satisfies(witness, system), f"bridge witness of ({x}, {y}, {z}) fails"
        witnesses.append(witness)
    return witnesses


PAPER_DISPLAY: Dict[PaperTuple, Tuple[List[Triple], List[Triple]]] = {
    PaperTuple.THEOREM1_20: (
        [(3, 20, 4), (5, 20, 6), (8, 12, 2), (9, 20, 10), (14, 14, 15), (14, 16, 17), (16, 20, 15)],
        [
            (1, 1, 2),
            (3, 4, 1),
            (5, 6, 7),
            (7, 7, 8),
            (7, 11, 13),
            (9, 10, 11),
            (11, 11, 12),
            (13, 19, 18),
            (16, 17, 18),
        ],
    ),
    PaperTuple.THEOREM2_17: (
        [(1, 16, 2), (5, 16, 6), (8, 12, 4), (9, 16, 10), (13, 14, 6), (16, 16, 15), (17, 17, 16)],
        [(1, 2, 3), (3, 3, 4), (5, 6, 7), (7, 7, 8), (9, 10, 11), (11, 11, 12), (15, 15, 14), (16, 16, 15)],
    ),
}


def format_display(n: int, additions: List[Triple], products: List[Triple], skip_last_in_products: bool) -> str:
    """Render display triples the way the reference listings print them."""
    last = f"<{n}" if skip_last_in_products else ""
    lines = ["the triples [i,j,k] with i=<j and A[i]+A[j]=A[k]"]
    lines.extend(f"[{i}, {j}, {k}]" for i, j, k in additions)
    lines.append(f"the triples [i,j,k] with i=<j{last} and A[i]*A[j]=A[k]")
    lines.extend(f"[{i}, {j}, {k}]" for i, j, k in products)
    return "\n".join(lines) + "\n"


def paper_display(which: PaperTuple) -> Tuple[List[Triple], List[Triple]]:
    """Published addition and product listings of ``which``."""
    if which not in PAPER_DISPLAY:
        raise EquationError(f"No published listing for {which.name}")
    return PAPER_DISPLAY[which]
