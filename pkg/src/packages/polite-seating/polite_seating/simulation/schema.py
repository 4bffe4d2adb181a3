"""
Round-robin insertion orders over 2^i runs and their replay on concrete rows
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .gaps import empty_runs
from .oracle import is_reachable

logger = logging.getLogger(__name__)

DEFAULT_MAX_LEVEL = 20

EMPTY_SEAT = 'empty-seat'
OCCUPIED_SEAT = 'occupied-seat'
INSERTION_KINDS = (EMPTY_SEAT, OCCUPIED_SEAT)

Row = Tuple[bool, ...]


@dataclass(frozen=True)
class SchemaTuple:
    """Insertion order over 2^i runs; entries are 1-based run numbers."""
    i: int
    entries: Tuple[int, ...]

    def __str__(self) -> str:
        return ';'.join(str(entry) for entry in self.entries)


def schema_tuple(i: int, max_level: int = DEFAULT_MAX_LEVEL) -> SchemaTuple:
    """
    Build the order for 2^i runs by doubling from (1, 2).

    Level i+1 takes 2s-1 for every entry s of level i, then 2s.

    Args:
        i: Level (>= 1)
        max_level: Largest level accepted

    Returns:
        SchemaTuple
    """
    if not isinstance(i, int) or i < 1:
        raise ValueError(f"level must be a positive integer, got {i!r}")
    if i > max_level:
        raise ValueError(f"level {i} exceeds the configured maximum {max_level}")

    entries = (1, 2)
    for _ in range(i - 1):
        entries = tuple(2 * s - 1 for s in entries) + tuple(2 * s for s in entries)
    return SchemaTuple(i=i, entries=entries)


def canonical_start(l: int, h: int) -> Row:
    """X followed by 2^h copies of (l empty seats, X)."""
    if l < 1:
        raise ValueError(f"run length must be >= 1, got {l}")
    if h < 1:
        raise ValueError(f"level must be >= 1, got {h}")
    row = [True]
    for _ in range(1 << h):
        row += [False] * l + [True]
    return tuple(row)


def render(row: Sequence[bool]) -> str:
    return ''.join('X' if taken else '·' for taken in row)


def _check_start(row: Row, l: int, h: int):
    runs = empty_runs(row)
    if not row or not row[0] or not row[-1]:
        raise ValueError(f"start row {render(row)} must be occupied at both ends")
    lengths = [end - start + 1 for start, end in runs]
    if len(lengths) != 1 << h or any(length != l for length in lengths):
        raise ValueError(
            f"start row {render(row)} must hold {1 << h} runs of length {l}, got {lengths}"
        )
    if not is_reachable(row):
        raise ValueError(f"start row {render(row)} is not reachable under the plain rule")


def _run_starts(row: Row) -> List[int]:
    return [start for start, _ in empty_runs(row)]


def simulate_insertions(
    l: int,
    h: int,
    kind: str,
    start: Optional[Sequence[bool]] = None,
    max_level: int = DEFAULT_MAX_LEVEL,
) -> List[Row]:
    """
    One full round of insertions over 2^h equal runs, in schema_tuple(h) order.

    empty-seat: each run grows by one empty seat.
    occupied-seat: each run (even length l) gets a new occupied seat in its
    middle, leaving l/2 empty seats on either side.

    Args:
        l: Run length (>= 1)
        h: Level (>= 1); the row holds 2^h runs
        kind: 'empty-seat' or 'occupied-seat'
        start: Starting row; defaults to canonical_start(l, h)
        max_level: Largest level accepted

    Returns:
        The row after each insertion, 2^h rows in total
    """
    if kind not in INSERTION_KINDS:
        raise ValueError(f"kind must be one of {INSERTION_KINDS}, got {kind!r}")
    if kind == OCCUPIED_SEAT and l % 2:
        raise ValueError(f"occupied-seat insertion needs an even run length, got {l}")
    order = schema_tuple(h, max_level).entries

    row = canonical_start(l, h) if start is None else tuple(bool(seat) for seat in start)
    _check_start(row, l, h)

    # position of run c (1-based) is tracked through the insertions
    shift = [0] * (len(order) + 1)
    starts = [None] + _run_starts(row)
    history = []
    for run in order:
        at = starts[run] + shift[run]
        if kind == EMPTY_SEAT:
            row = row[:at] + (False,) + row[at:]
        else:
            middle = at + l // 2
            row = row[:middle] + (True,) + row[middle:]
        for later in range(run + 1, len(shift)):
            shift[later] += 1
        history.append(row)
        logger.debug("Schema insertion", extra={
            "custom_dimensions": {"run": run, "kind": kind, "row": render(row)}
        })
    return history
