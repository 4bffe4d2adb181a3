"""
Closed forms for the per-distance census of a row whose first person sits leftmost

b(p, k): persons who take a seat at distance exactly k
d(p, k): adjacent seat pairs that at some moment both carry distance k

Both are piecewise over dyadic intervals of p, one branch per interval piece.
"""

from dataclasses import dataclass
from typing import Optional

from .factorials import BigCount, dyadic_index


@dataclass(frozen=True)
class DistanceQuery:
    """
    A (p, k) evaluation point plus its dyadic index.

    m is set only where the interval structure applies:
    k >= 2 and p >= 1 + 2k, or k == 1 and p >= 4.
    """
    p: int
    k: int
    m: Optional[int] = None

    @classmethod
    def of(cls, p: int, k: int) -> 'DistanceQuery':
        """
        Validate (p, k) and attach m where it is defined.

        Args:
            p: Seat/person count (>= 1)
            k: Distance (>= 1)

        Returns:
            DistanceQuery
        """
        _check_positive(p, 'p')
        _check_positive(k, 'k')
        m = None
        if k >= 2 and p >= 1 + 2 * k:
            m = m_index_general(p, k)
        elif k == 1 and p >= 4:
            m = m_index_one(p)
        return cls(p=p, k=k, m=m)

    @property
    def interval(self) -> Optional[tuple]:
        """Half-open interval [lo, hi) of p sharing this m, or None."""
        if self.m is None:
            return None
        unit = 2 * self.k if self.k >= 2 else 3
        return 1 + (unit << self.m), 1 + (unit << (self.m + 1))


def _check_positive(value: int, name: str):
    if not isinstance(value, int) or value < 1:
        raise ValueError(f"{name} must be a positive integer, got {value!r}")


def m_index_general(p: int, k: int) -> int:
    """
    Dyadic index for k >= 2: the m with 2**m * 2k <= p - 1 < 2**(m+1) * 2k.

    Args:
        p: Seat count (>= 1 + 2k)
        k: Distance (>= 2)

    Returns:
        m >= 0
    """
    if k < 2:
        raise ValueError(f"m_index_general needs k >= 2, got k={k}")
    if p < 1 + 2 * k:
        raise ValueError(
            f"m_index_general needs p >= 1 + 2k = {1 + 2 * k}, got p={p}"
        )
    return dyadic_index(p - 1, 2 * k)


def m_index_one(p: int) -> int:
    """
    Dyadic index for k == 1: the m with 2**m * 3 <= p - 1 < 2**(m+1) * 3.

    Args:
        p: Seat count (>= 4)

    Returns:
        m >= 0
    """
    if p < 4:
        raise ValueError(f"m_index_one needs p >= 4, got p={p}")
    return dyadic_index(p - 1, 3)


def b(p: int, k: int) -> BigCount:
    """
    Number of persons seated at distance exactly k (first person leftmost).

    Args:
        p: Seat count (>= 1)
        k: Distance (>= 1)

    Returns:
        b(p, k); 0 whenever k >= p
    """
    _check_positive(p, 'p')
    _check_positive(k, 'k')
    if k == 1:
        return _b_one(p)

    if p < k + 1:
        return 0
    if p == k + 1:
        return 1
    if p < 1 + 2 * k:
        return 0

    t = 1 << m_index_general(p, k)
    if p <= 1 + t * (2 * k + 1):
        return t
    if p <= 1 + t * (2 * k + 2):
        return 1 + t * (2 * k + 2) - p
    if p <= 1 + t * (4 * k - 2):
        return 0
    return p - 1 - t * (4 * k - 2)


def _b_one(p: int) -> BigCount:
    if p == 1:
        return 0
    if p in (2, 3):
        return 1

    t = 1 << m_index_one(p)
    if p <= 1 + 4 * t:
        return 2 * t
    return p - 1 - 2 * t


def d(p: int, k: int) -> BigCount:
    """
    Number of distinct adjacent pairs that both carry distance k at some moment.

    Args:
        p: Seat count (>= 1)
        k: Distance (>= 1)

    Returns:
        d(p, k)
    """
    _check_positive(p, 'p')
    _check_positive(k, 'k')
    if k == 1:
        return _d_one(p)

    if p < 1 + 2 * k:
        return 0

    t = 1 << m_index_general(p, k)
    if p <= 1 + t * (2 * k + 1):
        return p - 1 - t * 2 * k
    if p <= 1 + t * (2 * k + 2):
        return 1 + t * (2 * k + 2) - p
    return 0


def _d_one(p: int) -> BigCount:
    if p < 4:
        return 0

    t = 1 << m_index_one(p)
    if p <= 1 + 4 * t:
        return 1 + 4 * t - p
    return p - 1 - 4 * t


def b_row(p: int, kmax: Optional[int] = None) -> list:
    """b(p, 1..kmax) as a list indexed from k=1 (kmax defaults to p - 1)."""
    kmax = p - 1 if kmax is None else kmax
    return [b(p, k) for k in range(1, kmax + 1)]


def d_row(p: int, kmax: Optional[int] = None) -> list:
    """d(p, 1..kmax) as a list indexed from k=1 (kmax defaults to p - 1)."""
    kmax = p - 1 if kmax is None else kmax
    return [d(p, k) for k in range(1, kmax + 1)]
