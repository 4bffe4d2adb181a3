"""
Exact integer helpers shared by the formula modules
"""

import math
from functools import lru_cache

# Arbitrary-precision nonnegative integer (counts, factorial products)
BigCount = int


@lru_cache(maxsize=None)
def factorial(n: int) -> BigCount:
    """
    Memoized exact factorial.

    Args:
        n: Nonnegative integer

    Returns:
        n!
    """
    if n < 0:
        raise ValueError(f"factorial: n has to be >= 0, but was {n}")
    return math.factorial(n)


def dyadic_index(numerator: int, unit: int) -> int:
    """
    Largest m >= 0 with unit * 2**m <= numerator, i.e. floor(log2(numerator / unit)).

    Exact at the boundary points numerator == unit * 2**m.

    Args:
        numerator: Value being bracketed (>= unit)
        unit: Positive interval unit

    Returns:
        The dyadic index m
    """
    if unit < 1:
        raise ValueError(f"dyadic_index: unit must be >= 1, got {unit}")
    if numerator < unit:
        raise ValueError(
            f"dyadic_index: numerator {numerator} is below unit {unit}, "
            f"the index would be negative"
        )
    q = numerator // unit
    # floor(numerator / unit) has the same floor(log2) as numerator / unit
    return q.bit_length() - 1


def ceil_div(a: int, b: int) -> int:
    """Exact ceiling of a / b for b > 0."""
    return -(-a // b)


def power_factorial_product(levels: int) -> BigCount:
    """
    Product (2**0)! * (2**1)! * ... * (2**(levels-1))!.

    Empty product (levels < 1) is 1.
    """
    result = 1
    for j in range(1, levels + 1):
        result *= factorial(1 << (j - 1))
    return result
