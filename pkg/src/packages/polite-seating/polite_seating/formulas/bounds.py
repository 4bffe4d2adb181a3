"""
Estimates for a(n): the lower bound U, the upper bound O and the b(p, 1) sandwich

Also carries the intermediate quantities the bounds are built from, so the
full chain U <= lower_bound_b1 <= a <= upper_bound_b1 can be checked.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional

from .closed_form import b
from .counting import a
from .factorials import BigCount, ceil_div, dyadic_index, factorial, power_factorial_product


@dataclass(frozen=True)
class BoundQuery:
    """
    Summation index i of an n-seat bound together with m_i = floor(log2((i-1)/4)).

    m_i is None for i <= 4, where the product over j = 1..m_i is empty.
    """
    n: int
    i: int
    m_i: Optional[int]

    @classmethod
    def of(cls, n: int, i: int) -> 'BoundQuery':
        if not 1 <= i <= n:
            raise ValueError(f"i must lie in 1..{n}, got {i}")
        m_i = dyadic_index(i - 1, 4) if i - 1 >= 4 else None
        return cls(n=n, i=i, m_i=m_i)

    @property
    def dyadic_product(self) -> BigCount:
        return power_factorial_product(self.m_i or 0)


def lemma61_product(p: int) -> BigCount:
    """
    Product over j = 1..m' of (2^(j-1))! with m' = floor(log2((p-1)/4)).

    Lower bound for the product of b(p, j)! over j = 2..p-1.

    Args:
        p: Seat count (>= 1)

    Returns:
        The product; 1 when m' < 1
    """
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    if p - 1 < 4:
        return 1
    return power_factorial_product(dyadic_index(p - 1, 4))


def _upper_half(n: int) -> range:
    return range(ceil_div(n, 2) + 1, n + 1)


def lower_bound_U(n: int) -> BigCount:
    """
    Lower bound U for a(n).

    Args:
        n: Seat count (>= 2)

    Returns:
        U(n)
    """
    if n < 2:
        raise ValueError(f"lower_bound_U is defined for n >= 2, got n={n}")
    total = 0
    for i in _upper_half(n):
        query = BoundQuery.of(n, i)
        total += factorial((i - 1) // 2 + (n - i) // 2) * query.dyadic_product
    return 2 * total


def upper_bound_O(n: int) -> BigCount:
    """
    Upper bound O for a(n).

    Args:
        n: Seat count (>= 1)

    Returns:
        O(n)
    """
    if n < 1:
        raise ValueError(f"upper_bound_O is defined for n >= 1, got n={n}")
    total = 0
    for i in range(1, n + 1):
        ones = b1_upper(i) + b1_upper(n + 1 - i)
        total += factorial(ones) * factorial(n - ones)
    return total


def b1_lower(p: int) -> BigCount:
    """floor((p-1)/2), a lower bound for b(p, 1)."""
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    return (p - 1) // 2


def b1_upper(p: int) -> BigCount:
    """ceil(2(p-1)/3), an upper bound for b(p, 1)."""
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    return ceil_div(2 * (p - 1), 3)


def lower_bound_b1(n: int) -> BigCount:
    """U before b(p, 1) is replaced by its lower bound (n >= 2)."""
    if n < 2:
        raise ValueError(f"lower_bound_b1 is defined for n >= 2, got n={n}")
    total = 0
    for i in _upper_half(n):
        ones = b(i, 1) + b(n + 1 - i, 1)
        total += factorial(ones) * BoundQuery.of(n, i).dyadic_product
    return 2 * total


def upper_bound_b1(n: int) -> BigCount:
    """O before b(p, 1) is replaced by its upper bound."""
    if n < 1:
        raise ValueError(f"upper_bound_b1 is defined for n >= 1, got n={n}")
    total = 0
    for i in range(1, n + 1):
        ones = b(i, 1) + b(n + 1 - i, 1)
        total += factorial(ones) * factorial(n - ones)
    return total


def dyadic_sum_lower(n: int) -> BigCount:
    """2 * sum over the upper half of i of the dyadic factorial product (n >= 2)."""
    if n < 2:
        raise ValueError(f"dyadic_sum_lower is defined for n >= 2, got n={n}")
    return 2 * sum(BoundQuery.of(n, i).dyadic_product for i in _upper_half(n))


def far_distance_sum(n: int) -> BigCount:
    """Sum over i of the product over j = 2..n-1 of (b(i,j) + b(n+1-i,j))!."""
    if n < 1:
        raise ValueError(f"far_distance_sum is defined for n >= 1, got n={n}")
    total = 0
    for i in range(1, n + 1):
        term = 1
        for j in range(2, n):
            term *= factorial(b(i, j) + b(n + 1 - i, j))
        total += term
    return total


@dataclass(frozen=True)
class ComparisonRow:
    """One row of the bounds comparison table, all values exact."""
    n: int
    lower: Optional[BigCount]
    count: BigCount
    upper: BigCount
    factorial_n: BigCount

    @property
    def lower_ratio(self) -> Optional[Fraction]:
        if self.lower is None:
            return None
        return Fraction(self.lower, self.count)

    @property
    def upper_ratio(self) -> Fraction:
        return Fraction(self.upper, self.count)


def comparison_row(n: int) -> ComparisonRow:
    """U (None at n = 1), a(n), O and n! for one n."""
    return ComparisonRow(
        n=n,
        lower=lower_bound_U(n) if n >= 2 else None,
        count=a(n),
        upper=upper_bound_O(n),
        factorial_n=factorial(n),
    )


def comparison_table(nmax: int, extra: Iterable[int] = ()) -> List[ComparisonRow]:
    """
    Rows for n = 1..nmax followed by the extra n values (sorted, deduplicated).

    Args:
        nmax: Last consecutive n (>= 1)
        extra: Additional n values beyond nmax

    Returns:
        List of ComparisonRow
    """
    if nmax < 1:
        raise ValueError(f"nmax must be >= 1, got {nmax}")
    ns = list(range(1, nmax + 1))
    ns += sorted({n for n in extra if n > nmax})
    return [comparison_row(n) for n in ns]
