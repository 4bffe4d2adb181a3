"""
Seating rules on two representations of a partly occupied row

GapState keeps only the run lengths (what counting depends on); the
seat-level functions work on explicit occupancy vectors and serve as the
independent reference for the gap abstraction.
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

LEFT = 'left'
INTERNAL = 'internal'
RIGHT = 'right'


@dataclass(frozen=True)
class RuleVariant:
    """
    Tie-break filters layered on the maximum-distance rule.

    longest_run_filter: only seats inside the longest empty runs
    fewest_neighbors_filter: among the remaining seats, fewest occupied neighbours
    """
    longest_run_filter: bool = False
    fewest_neighbors_filter: bool = False

    @property
    def name(self) -> str:
        for name, rule in RULES.items():
            if rule == self:
                return name
        return repr(self)


PLAIN = RuleVariant(False, False)
LONGEST_RUN = RuleVariant(True, False)
FEWEST_NEIGHBORS = RuleVariant(False, True)
LONGEST_RUN_FEWEST_NEIGHBORS = RuleVariant(True, True)

RULES = {
    'plain': PLAIN,
    'longest-run': LONGEST_RUN,
    'fewest-neighbors': FEWEST_NEIGHBORS,
    'longest-run+fewest-neighbors': LONGEST_RUN_FEWEST_NEIGHBORS,
}


def run_measure(length: int, at_edge: bool) -> int:
    """
    Length used when comparing runs for the longest-run filter.

    An edge run of L seats counts as 2L - 1: it offers the same best
    distance as an internal run of that length.
    """
    return 2 * length - 1 if at_edge else length


def internal_best_distance(length: int) -> int:
    return (length - 1) // 2 + 1


@dataclass(frozen=True)
class GapState:
    """
    Row abstraction: left edge run, sorted internal runs, right edge run.

    Only meaningful once at least one seat is occupied.
    """
    left_end: int
    internal: Tuple[int, ...]
    right_end: int

    def __post_init__(self):
        if self.left_end < 0 or self.right_end < 0:
            raise ValueError(f"end runs must be >= 0, got {self.left_end}, {self.right_end}")
        if any(length < 1 for length in self.internal):
            raise ValueError(f"internal runs must be >= 1, got {self.internal}")
        if list(self.internal) != sorted(self.internal):
            object.__setattr__(self, 'internal', tuple(sorted(self.internal)))

    @classmethod
    def first_at(cls, n: int, i: int) -> 'GapState':
        """State after the first person takes seat i (1-based) of n."""
        if not 1 <= i <= n:
            raise ValueError(f"first seat must lie in 1..{n}, got {i}")
        return cls(i - 1, (), n - i)

    @classmethod
    def from_occupancy(cls, occupancy: Sequence[bool]) -> 'GapState':
        runs = empty_runs(occupancy)
        if len(runs) == 1 and runs[0][1] - runs[0][0] + 1 == len(occupancy):
            raise ValueError("a GapState needs at least one occupied seat")
        n = len(occupancy)
        left = right = 0
        internal = []
        for start, end in runs:
            length = end - start + 1
            if start == 0:
                left = length
            elif end == n - 1:
                right = length
            else:
                internal.append(length)
        return cls(left, tuple(sorted(internal)), right)

    @property
    def empty_seats(self) -> int:
        return self.left_end + sum(self.internal) + self.right_end

    @property
    def is_full(self) -> bool:
        return self.empty_seats == 0

    def mirrored(self) -> 'GapState':
        return GapState(self.right_end, self.internal, self.left_end)

    def canonical(self) -> 'GapState':
        """Mirror image with the shorter end run on the left."""
        if self.left_end <= self.right_end:
            return self
        return self.mirrored()


@dataclass(frozen=True)
class Candidate:
    """
    A seat a rule-obeying person may take.

    gap_index indexes state.internal for internal runs (0 for end runs);
    offset is the seat position inside its run, counted from the left.
    """
    gap_kind: str
    gap_index: int
    gap_length: int
    offset: int
    distance: int
    occupied_neighbors: int

    def successor(self, state: GapState) -> GapState:
        """State after this seat is taken."""
        if self.gap_kind == LEFT:
            grown = state.internal + ((self.gap_length - 1,) if self.gap_length > 1 else ())
            return GapState(0, grown, state.right_end)
        if self.gap_kind == RIGHT:
            grown = state.internal + ((self.gap_length - 1,) if self.gap_length > 1 else ())
            return GapState(state.left_end, grown, 0)

        rest = list(state.internal)
        del rest[self.gap_index]
        for piece in (self.offset, self.gap_length - 1 - self.offset):
            if piece > 0:
                rest.append(piece)
        return GapState(state.left_end, tuple(rest), state.right_end)

    @property
    def successor_key(self) -> Tuple[str, int]:
        """Candidates sharing this key lead to the same successor state."""
        return self.gap_kind, self.gap_length


def _run_candidates(kind: str, index: int, length: int) -> List[Candidate]:
    if kind == LEFT:
        return [Candidate(LEFT, 0, length, 0, length, 1 if length == 1 else 0)]
    if kind == RIGHT:
        return [Candidate(RIGHT, 0, length, length - 1, length, 1 if length == 1 else 0)]

    best = internal_best_distance(length)
    offsets = [(length - 1) // 2] if length % 2 else [length // 2 - 1, length // 2]
    return [
        Candidate(INTERNAL, index, length, offset, best,
                  int(offset == 0) + int(offset == length - 1))
        for offset in offsets
    ]


def candidates(state: GapState, rule: RuleVariant = PLAIN) -> List[Candidate]:
    """
    Seats the next person may take.

    Order of filters: longest run (if set), maximal distance, fewest
    occupied neighbours (if set).

    Args:
        state: Row with at least one occupied seat
        rule: Tie-break filters

    Returns:
        Non-empty list of Candidate
    """
    if state.is_full:
        raise ValueError("no empty seat left to choose from")

    runs = []
    if state.left_end:
        runs.append((LEFT, 0, state.left_end, True))
    for index, length in enumerate(state.internal):
        runs.append((INTERNAL, index, length, False))
    if state.right_end:
        runs.append((RIGHT, 0, state.right_end, True))

    if rule.longest_run_filter:
        longest = max(run_measure(length, edge) for _, _, length, edge in runs)
        runs = [run for run in runs if run_measure(run[2], run[3]) == longest]

    pool = [c for kind, index, length, _ in runs for c in _run_candidates(kind, index, length)]
    top = max(c.distance for c in pool)
    pool = [c for c in pool if c.distance == top]

    if rule.fewest_neighbors_filter:
        fewest = min(c.occupied_neighbors for c in pool)
        pool = [c for c in pool if c.occupied_neighbors == fewest]
    return pool


def empty_runs(occupancy: Sequence[bool]) -> List[Tuple[int, int]]:
    """Maximal empty runs as inclusive (start, end) seat indices."""
    runs = []
    start = None
    for seat, taken in enumerate(occupancy):
        if not taken and start is None:
            start = seat
        elif taken and start is not None:
            runs.append((start, seat - 1))
            start = None
    if start is not None:
        runs.append((start, len(occupancy) - 1))
    return runs


def seat_distances(occupancy: Sequence[bool]) -> List[int]:
    """
    Distance of every seat to the nearest occupied seat (0 for occupied seats).

    Requires at least one occupied seat.
    """
    n = len(occupancy)
    far = n + 1
    dist = [far] * n
    last = None
    for seat in range(n):
        if occupancy[seat]:
            last = seat
        if last is not None:
            dist[seat] = seat - last
    last = None
    for seat in range(n - 1, -1, -1):
        if occupancy[seat]:
            last = seat
        if last is not None:
            dist[seat] = min(dist[seat], last - seat)
    return dist


def occupied_neighbors(occupancy: Sequence[bool], seat: int) -> int:
    count = 0
    if seat > 0 and occupancy[seat - 1]:
        count += 1
    if seat + 1 < len(occupancy) and occupancy[seat + 1]:
        count += 1
    return count


def seat_candidates(occupancy: Sequence[bool], rule: RuleVariant = PLAIN) -> List[int]:
    """
    Same rule as candidates(), evaluated seat by seat on an explicit row.

    An empty row allows every seat.

    Args:
        occupancy: True for an occupied seat
        rule: Tie-break filters

    Returns:
        0-based indices of the allowed seats, ascending
    """
    n = len(occupancy)
    empty = [seat for seat in range(n) if not occupancy[seat]]
    if not empty:
        raise ValueError("no empty seat left to choose from")
    if len(empty) == n:
        return empty

    pool = empty
    if rule.longest_run_filter:
        measure = {}
        for start, end in empty_runs(occupancy):
            value = run_measure(end - start + 1, start == 0 or end == n - 1)
            for seat in range(start, end + 1):
                measure[seat] = value
        longest = max(measure[seat] for seat in pool)
        pool = [seat for seat in pool if measure[seat] == longest]

    dist = seat_distances(occupancy)
    top = max(dist[seat] for seat in pool)
    pool = [seat for seat in pool if dist[seat] == top]

    if rule.fewest_neighbors_filter:
        counts = {seat: occupied_neighbors(occupancy, seat) for seat in pool}
        fewest = min(counts.values())
        pool = [seat for seat in pool if counts[seat] == fewest]
    return pool
