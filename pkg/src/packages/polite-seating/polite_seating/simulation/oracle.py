"""
Brute-force ground truth for the seating counts and the per-distance censuses

Three independent routes:
- count_sequences: memoized recursion over GapState with multiplicity weights
- count_sequences_naive: depth-first search over explicit rows, no memo
- b_census / d_census: replay of one concrete trajectory
"""

import logging
from collections import Counter
from typing import Dict, FrozenSet, List, Sequence, Set, Tuple

from .gaps import (
    PLAIN,
    GapState,
    RuleVariant,
    candidates,
    seat_candidates,
    seat_distances,
)

logger = logging.getLogger(__name__)

DEFAULT_NAIVE_CAP = 11
DEFAULT_CENSUS_INVARIANCE_CAP = 14

# distance k -> count
CensusTable = Dict[int, int]

__all__ = [
    'CensusTable', 'candidates', 'count_sequences', 'count_sequences_first_at',
    'count_sequences_naive', 'b_census', 'd_census', 'census_outcomes',
    'verify_census_invariance', 'is_reachable', 'first_seat_counts',
]


class _SequenceCounter:
    """Memoized completion counts for one (rule, mirror) setting."""

    def __init__(self, rule: RuleVariant, mirror: bool = True):
        self.rule = rule
        self.mirror = mirror
        self.memo: Dict[GapState, int] = {}

    def completions(self, state: GapState) -> int:
        if self.mirror:
            state = state.canonical()
        if state.is_full:
            return 1
        cached = self.memo.get(state)
        if cached is not None:
            return cached

        weights = Counter()
        successors = {}
        for candidate in candidates(state, self.rule):
            key = candidate.successor_key
            weights[key] += 1
            if key not in successors:
                successors[key] = candidate.successor(state)

        total = sum(weight * self.completions(successors[key]) for key, weight in weights.items())
        self.memo[state] = total
        return total


def _check_n(n: int):
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")


def count_sequences(n: int, rule: RuleVariant = PLAIN, mirror: bool = True) -> int:
    """
    Number of distinct full seating sequences on n seats.

    Args:
        n: Seat count (>= 1)
        rule: Tie-break filters
        mirror: Fold mirror-image states into one memo entry

    Returns:
        Sequence count
    """
    _check_n(n)
    counter = _SequenceCounter(rule, mirror)
    total = sum(counter.completions(GapState.first_at(n, i)) for i in range(1, n + 1))
    logger.debug("Oracle count finished", extra={
        "custom_dimensions": {
            "n": n,
            "rule": rule.name,
            "mirror": mirror,
            "memo_states": len(counter.memo),
        }
    })
    return total


def count_sequences_first_at(n: int, i: int, rule: RuleVariant = PLAIN, mirror: bool = True) -> int:
    """
    Sequences whose first person takes seat i.

    Args:
        n: Seat count (>= 1)
        i: First seat, 1..n
        rule: Tie-break filters
        mirror: Fold mirror-image states into one memo entry

    Returns:
        Sequence count
    """
    _check_n(n)
    if not 1 <= i <= n:
        raise ValueError(f"first seat must lie in 1..{n}, got {i}")
    return _SequenceCounter(rule, mirror).completions(GapState.first_at(n, i))


def count_sequences_naive(n: int, rule: RuleVariant = PLAIN, cap: int = DEFAULT_NAIVE_CAP) -> int:
    """
    Same count by plain depth-first search over explicit rows.

    Args:
        n: Seat count, 1..cap
        rule: Tie-break filters
        cap: Largest n accepted

    Returns:
        Sequence count
    """
    _check_n(n)
    if n > cap:
        raise ValueError(f"naive enumeration is capped at n={cap}, got n={n}")

    row = [False] * n

    def walk(remaining: int) -> int:
        if remaining == 0:
            return 1
        total = 0
        for seat in seat_candidates(row, rule):
            row[seat] = True
            total += walk(remaining - 1)
            row[seat] = False
        return total

    return walk(n)


def _record_pairs(row: Sequence[bool], seen: Set[Tuple[int, int]]):
    """Add (left seat, k) for every adjacent empty pair that both carry distance k."""
    dist = seat_distances(row)
    for seat in range(len(row) - 1):
        if not row[seat] and not row[seat + 1] and dist[seat] == dist[seat + 1]:
            seen.add((seat, dist[seat]))


def _tally(pairs: Set[Tuple[int, int]]) -> CensusTable:
    return dict(Counter(k for _, k in pairs))


def _canonical_trajectory(p: int) -> Tuple[CensusTable, CensusTable]:
    """Leftmost-candidate trajectory with the first person on seat 1."""
    _check_n(p)
    row = [False] * p
    row[0] = True
    distances = Counter()
    pairs: Set[Tuple[int, int]] = set()
    _record_pairs(row, pairs)
    for _ in range(p - 1):
        seat = seat_candidates(row, PLAIN)[0]
        distances[seat_distances(row)[seat]] += 1
        row[seat] = True
        _record_pairs(row, pairs)
    return dict(distances), _tally(pairs)


def b_census(p: int) -> CensusTable:
    """
    Distance at seating time of persons 2..p, first person leftmost.

    Args:
        p: Seat count (>= 1)

    Returns:
        CensusTable without zero entries
    """
    return _canonical_trajectory(p)[0]


def d_census(p: int) -> CensusTable:
    """
    Adjacent pairs that both carry distance k after some seating, first person leftmost.

    Args:
        p: Seat count (>= 1)

    Returns:
        CensusTable without zero entries
    """
    return _canonical_trajectory(p)[1]


def _freeze(table: CensusTable) -> FrozenSet[Tuple[int, int]]:
    return frozenset(table.items())


def census_outcomes(p: int) -> Set[Tuple[FrozenSet, FrozenSet]]:
    """
    Distinct (b census, d census) results over every plain trajectory with the first person leftmost.

    Once the largest remaining distance is 1 the fill order cannot change
    either census (no new equal-distance pair can form), so those orders
    are collapsed into one branch.

    Args:
        p: Seat count (>= 1)

    Returns:
        Set of frozen (b, d) census pairs
    """
    _check_n(p)
    row = [False] * p
    row[0] = True
    outcomes = set()

    def walk(distances: Counter, pairs: Set[Tuple[int, int]], remaining: int):
        if remaining and max(seat_distances(row)) == 1:
            distances = distances.copy()
            distances[1] += remaining
            remaining = 0
        if remaining == 0:
            b_table = {k: v for k, v in distances.items() if v}
            outcomes.add((_freeze(b_table), _freeze(_tally(pairs))))
            return
        dist = seat_distances(row)
        for seat in seat_candidates(row, PLAIN):
            row[seat] = True
            step = distances.copy()
            step[dist[seat]] += 1
            grown = set(pairs)
            _record_pairs(row, grown)
            walk(step, grown, remaining - 1)
            row[seat] = False

    initial: Set[Tuple[int, int]] = set()
    _record_pairs(row, initial)
    walk(Counter(), initial, p - 1)
    return outcomes


def verify_census_invariance(p: int, cap: int = DEFAULT_CENSUS_INVARIANCE_CAP) -> bool:
    """
    True iff every plain trajectory (first person leftmost) yields the same b and d census.

    Args:
        p: Seat count, 1..cap
        cap: Largest p accepted

    Returns:
        bool
    """
    _check_n(p)
    if p > cap:
        raise ValueError(f"census invariance check is capped at p={cap}, got p={p}")
    outcomes = census_outcomes(p)
    if len(outcomes) != 1:
        logger.warning("Census depends on tie-breaking", extra={
            "custom_dimensions": {"p": p, "outcomes": len(outcomes)}
        })
    return len(outcomes) == 1


def is_reachable(occupancy: Sequence[bool]) -> bool:
    """
    True iff the occupied seats can be taken, in some order, under the plain rule.

    Args:
        occupancy: Explicit row (length >= 1), True for occupied

    Returns:
        bool
    """
    n = len(occupancy)
    if n < 1:
        raise ValueError("occupancy must contain at least one seat")
    target = frozenset(seat for seat in range(n) if occupancy[seat])
    if len(target) <= 1:
        return True

    memo: Dict[FrozenSet[int], bool] = {}

    def extend(taken: FrozenSet[int]) -> bool:
        if taken == target:
            return True
        if taken in memo:
            return memo[taken]
        row = [seat in taken for seat in range(n)]
        result = any(
            extend(taken | {seat})
            for seat in seat_candidates(row, PLAIN)
            if seat in target
        )
        memo[taken] = result
        return result

    return any(extend(frozenset([seat])) for seat in sorted(target))


def first_seat_counts(n: int, rule: RuleVariant = PLAIN) -> List[int]:
    """count_sequences_first_at for i = 1..n, sharing one memo."""
    _check_n(n)
    counter = _SequenceCounter(rule)
    return [counter.completions(GapState.first_at(n, i)) for i in range(1, n + 1)]
