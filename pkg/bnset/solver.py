from __future__ import annotations

import dataclasses
import logging
from collections import Counter, defaultdict, deque
from concurrent.futures import ThreadPoolExecutor
from enum import Enum
from typing import Deque, Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple

from bnset.core import Assignment, DomainKind, IntTuple, enumerate_tuples, format_tuple, shell_key
from bnset.exceptions import DomainError
from bnset.relations import Relation, RelationKind, RelationSystem, extract, satisfies
from bnset.util import exact_square_roots

logger = logging.getLogger(__name__)


class PropagationStatus(Enum):
    EXTENDED = "EXTENDED"
    CONFLICT = "CONFLICT"
    STUCK = "STUCK"


@dataclasses.dataclass(frozen=True)
class PropagationResult:
    status: PropagationStatus
    assignment: Assignment
    free: FrozenSet[int]
    conflict_relation: Optional[Relation] = None


@dataclasses.dataclass(frozen=True)
class SearchReport:
    tuple: IntTuple
    domain: DomainKind
    bound: int
    counterexamples: List[IntTuple]
    confirmations: int
    exhausted: bool
    nodes: int = 0

    def to_text(self, limit: Optional[int] = None) -> str:
        witnesses = self.counterexamples if limit is None else self.counterexamples[:limit]
        lines = [
            f"tuple: {format_tuple(self.tuple)}",
            f"domain: {self.domain.value}",
            f"bound: {self.bound}",
            f"exhausted: {'true' if self.exhausted else 'false'}",
            f"confirmations: {self.confirmations}",
            f"nodes: {self.nodes}",
            f"counterexamples: {len(self.counterexamples)}",
            "# bounded search: evidence only, not a proof of membership",
        ]
        lines.extend(format_tuple(witness) for witness in witnesses)
        return "\n".join(lines) + "\n"


class Conflict(Exception):
    def __init__(self, relation: Relation) -> None:
        super().__init__(str(relation))
        self.relation = relation


Forced = Optional[Tuple[int, int]]


class Propagator:
    """Forces values through a relation system until a fixpoint is reached.

    Values are only ever forced when every integer solution of the touched
    relation agrees on them, so no solution is lost.
    """

    def __init__(self, system: RelationSystem, domain: DomainKind) -> None:
        self._system = system
        self._domain = domain
        self._relations = list(system)
        self._watches: Dict[int, List[int]] = defaultdict(list)
        for position, relation in enumerate(self._relations):
            for index in set(relation.indices):
                self._watches[index].append(position)

    @property
    def system(self) -> RelationSystem:
        return self._system

    @property
    def domain(self) -> DomainKind:
        return self._domain

    def run(self, values: Dict[int, int], touched: Optional[Iterable[int]] = None) -> List[int]:
        """Extend ``values`` in place and return the newly forced indices.

        Raises ``Conflict`` when a relation cannot hold.
        """
        if touched is None:
            queue: Deque[int] = deque(range(len(self._relations)))
        else:
            queue = deque(sorted({position for index in touched for position in self._watches[index]}))
        pending = set(queue)
        forced: List[int] = []

        while queue:
            position = queue.popleft()
            pending.discard(position)
            relation = self._relations[position]
            result = self._apply(relation, values)
            if result is None:
                continue
            index, value = result
            if not self._domain.contains(value):
                raise Conflict(relation)
            values[index] = value
            forced.append(index)
            for other in self._watches[index]:
                if other not in pending:
                    pending.add(other)
                    queue.append(other)
        return forced

    def _apply(self, relation: Relation, values: Dict[int, int]) -> Forced:
        if relation.kind is RelationKind.UNIT:
            (index,) = relation.indices
            if index not in values:
                return index, 1
            if values[index] != 1:
                raise Conflict(relation)
            return None
        if relation.kind is RelationKind.ADD:
            return self._apply_add(relation, values)
        return self._apply_mul(relation, values)

    @staticmethod
    def _apply_add(relation: Relation, values: Dict[int, int]) -> Forced:
        i, j, k = relation.indices
        coefficients: Counter[int] = Counter()
        coefficients[i] += 1
        coefficients[j] += 1
        coefficients[k] -= 1

        known = 0
        unknown = []
        for index, coefficient in coefficients.items():
            if coefficient == 0:
                continue
            if index in values:
                known += coefficient * values[index]
            else:
                unknown.append(index)

        if not unknown:
            if known != 0:
                raise Conflict(relation)
            return None
        if len(unknown) > 1:
            return None
        index = unknown[0]
        coefficient = coefficients[index]
        if known % coefficient != 0:
            raise Conflict(relation)
        return index, -known // coefficient

    def _apply_mul(self, relation: Relation, values: Dict[int, int]) -> Forced:
        i, j, k = relation.indices
        unknown = {index for index in (i, j, k) if index not in values}

        if not unknown:
            if values[i] * values[j] != values[k]:
                raise Conflict(relation)
            return None

        if values.get(i) == 0 or values.get(j) == 0:
            if k in unknown:
                return k, 0
            if values[k] != 0:
                raise Conflict(relation)
            return None

        if len(unknown) > 1:
            return None

        (index,) = unknown
        in_factors = (i == index) + (j == index)
        in_product = k == index
        factor = 1
        for other in (i, j):
            if other != index:
                factor *= values[other]

        if in_factors == 0:
            return index, factor

        if in_factors == 1 and not in_product:
            product = values[k]
            if product % factor != 0:
                raise Conflict(relation)
            return index, product // factor

        if in_factors == 1:
            # v * factor == v
            return (index, 0) if factor != 1 else None

        if not in_product:
            roots = [root for root in exact_square_roots(values[k]) if self._domain.contains(root)]
            if not roots:
                raise Conflict(relation)
            return (index, roots[0]) if len(roots) == 1 else None

        # v * v == v
        candidates = [value for value in (0, 1) if self._domain.contains(value)]
        return (index, candidates[0]) if len(candidates) == 1 else None


def _check_partial(partial: Assignment, n: int, domain: DomainKind) -> Dict[int, int]:
    values: Dict[int, int] = {}
    for key, value in partial.items():
        if not isinstance(key, int) or key > n:
            raise KeyError(f"Variable {key!r} is not an index in 1..{n}")
        if not domain.contains(value):
            raise DomainError(f"Value {value} of y{key} is not in domain {domain.value}")
        values[key] = value
    return values


def propagate(r: RelationSystem, partial: Assignment, domain: DomainKind) -> PropagationResult:
    values = _check_partial(partial, r.n, domain)
    propagator = Propagator(r, domain)
    try:
        forced = propagator.run(values)
    except Conflict as conflict:
        logger.debug("Propagation conflict on '%s'", conflict.relation)
        return PropagationResult(
            status=PropagationStatus.CONFLICT,
            assignment=Assignment(values),
            free=frozenset(index for index in range(1, r.n + 1) if index not in values),
            conflict_relation=conflict.relation,
        )

    free = frozenset(index for index in range(1, r.n + 1) if index not in values)
    status = PropagationStatus.STUCK if free and not forced else PropagationStatus.EXTENDED
    return PropagationResult(status=status, assignment=Assignment(values), free=free)


class _Search:
    """Depth-first search over branched variables with propagation after every trial.

    Branched (not forced) variables range over domain values of absolute value
    at most ``bound``; forced values are unrestricted.
    """

    def __init__(self, propagator: Propagator, n: int, bound: int) -> None:
        self._propagator = propagator
        self._n = n
        self._bound = bound
        self.nodes = 0

    def next_variable(self, values: Dict[int, int]) -> Optional[int]:
        for index in range(1, self._n + 1):
            if index not in values:
                return index
        return None

    def branch(self, values: Dict[int, int], variable: int, value: int) -> Optional[Dict[int, int]]:
        self.nodes += 1
        trial = dict(values)
        trial[variable] = value
        try:
            self._propagator.run(trial, touched=[variable])
        except Conflict:
            return None
        return trial

    def solve(self, values: Dict[int, int], found: List[IntTuple]) -> None:
        variable = self.next_variable(values)
        if variable is None:
            found.append(IntTuple(values[index] for index in range(1, self._n + 1)))
            return
        for value in self._propagator.domain.values_within(self._bound):
            trial = self.branch(values, variable, value)
            if trial is not None:
                self.solve(trial, found)


def _search_all(r: RelationSystem, domain: DomainKind, bound: int, threads: int = 1) -> Tuple[List[IntTuple], int]:
    """All solutions within the bound, sorted by shell order, plus the number of visited nodes."""
    if bound < 0:
        raise ValueError(f"bound must be non-negative: {bound}")
    propagator = Propagator(r, domain)
    base: Dict[int, int] = {}
    try:
        propagator.run(base)
    except Conflict as conflict:
        logger.debug("System is inconsistent in %s: '%s'", domain.value, conflict.relation)
        return [], 0

    root = _Search(propagator, r.n, bound)
    variable = root.next_variable(base)
    if variable is None:
        return [IntTuple(base[index] for index in range(1, r.n + 1))], 0

    values = list(domain.values_within(bound))
    shards = [values[offset::threads] for offset in range(threads)]

    def _run_shard(shard: List[int]) -> Tuple[List[IntTuple], int]:
        search = _Search(propagator, r.n, bound)
        found: List[IntTuple] = []
        for value in shard:
            trial = search.branch(base, variable, value)
            if trial is not None:
                search.solve(trial, found)
        return found, search.nodes

    logger.debug("Searching %d branched values of y%d in %d shard(s)", len(values), variable, threads)
    if threads == 1:
        results = [_run_shard(shards[0])]
    else:
        with ThreadPoolExecutor(max_workers=threads) as executor:
            results = list(executor.map(_run_shard, shards))

    solutions = sorted((solution for found, _ in results for solution in found), key=shell_key)
    nodes = sum(count for _, count in results)
    logger.debug("Search visited %d nodes and found %d solutions", nodes, len(solutions))
    return solutions, nodes


def enumerate_solutions(
    r: RelationSystem,
    domain: DomainKind,
    bound: int,
    limit: Optional[int] = None,
    threads: int = 1,
) -> List[Assignment]:
    solutions, _ = _search_all(r, domain, bound, threads)
    if limit is not None:
        solutions = solutions[:limit]
    return [Assignment.from_tuple(solution) for solution in solutions]


def find_counterexample(
    t: IntTuple,
    domain: DomainKind,
    bound: int,
    threads: int = 1,
) -> Optional[Assignment]:
    t.check_domain(domain)
    solutions, _ = _search_all(extract(t), domain, bound, threads)
    for solution in solutions:
        if solution.at(1) != t.at(1):
            return Assignment.from_tuple(solution)
    return None


def certify_bounded(t: IntTuple, domain: DomainKind, bound: int, threads: int = 1) -> SearchReport:
    t.check_domain(domain)
    solutions, nodes = _search_all(extract(t), domain, bound, threads)
    counterexamples = [solution for solution in solutions if solution.at(1) != t.at(1)]
    return SearchReport(
        tuple=t,
        domain=domain,
        bound=bound,
        counterexamples=counterexamples,
        confirmations=len(solutions) - len(counterexamples),
        exhausted=True,
        nodes=nodes,
    )


def brute_force_solutions(r: RelationSystem, domain: DomainKind, max_shell: Optional[int] = None) -> Iterator[IntTuple]:
    """Solutions of ``r`` found by testing every tuple in shell order, without propagation.

    Without ``max_shell`` the iterator never ends on its own; callers bound consumption.
    """
    for candidate in enumerate_tuples(r.n, domain, max_shell):
        if satisfies(candidate, r):
            yield candidate
