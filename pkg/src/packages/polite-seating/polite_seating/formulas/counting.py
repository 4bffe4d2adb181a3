"""
Sequence counts assembled from the closed forms

Every count splits the row at the first person's seat i into a left part
of i seats and a right part of n+1-i seats, each with its first person at
the outer end, and multiplies per-distance factors built from b and d.
"""

import logging
from typing import List, Tuple

from .closed_form import b, d
from .factorials import BigCount, factorial

logger = logging.getLogger(__name__)


def _tables(n: int) -> Tuple[List[List[int]], List[List[int]]]:
    """
    b and d rows for every part size 1..n, distances 1..n-1.

    Row index is the part size p (index 0 unused), column j-1 holds distance j.
    """
    b_tab = [[]] + [[b(p, j) for j in range(1, n)] for p in range(1, n + 1)]
    d_tab = [[]] + [[d(p, j) for j in range(1, n)] for p in range(1, n + 1)]
    return b_tab, d_tab


def _check_n(n: int, minimum: int = 1):
    if not isinstance(n, int) or n < minimum:
        raise ValueError(f"n must be an integer >= {minimum}, got {n!r}")


def _paired(b_sum: int, d_sum: int) -> BigCount:
    """One seat from every pair first, then the rest: 2^d * d! * (b-d)!."""
    return (1 << d_sum) * factorial(d_sum) * factorial(b_sum - d_sum)


def _free(b_sum: int, d_sum: int) -> BigCount:
    """Any order over all b seats, two choices per pair: 2^d * b!."""
    return (1 << d_sum) * factorial(b_sum)


def a_summands(n: int, *, level_one_pairs: bool = False) -> List[BigCount]:
    """
    Per-first-seat terms of a(n).

    At distance 1 the two seats of a length-2 run are not a real choice:
    both get taken anyway and their order is already counted by b!.
    The pair exponent is therefore dropped at j = 1. level_one_pairs=True
    keeps it, which overcounts (a(6) becomes 84 instead of 48).

    Args:
        n: Seat count (>= 1)
        level_one_pairs: Keep the 2^d factor at distance 1

    Returns:
        List of n terms, index i-1 for first seat i
    """
    _check_n(n)
    b_tab, d_tab = _tables(n)
    terms = []
    for i in range(1, n + 1):
        left, right = b_tab[i], b_tab[n + 1 - i]
        dl, dr = d_tab[i], d_tab[n + 1 - i]
        term = 1
        for j in range(n - 1):
            pairs = dl[j] + dr[j]
            if j == 0 and not level_one_pairs:
                pairs = 0
            term *= _free(left[j] + right[j], pairs)
        terms.append(term)
    return terms


def a(n: int) -> BigCount:
    """
    Number of seating sequences under the plain maximum-distance rule.

    Args:
        n: Seat count (>= 1)

    Returns:
        a(n)
    """
    return sum(a_summands(n))


def a166079(n: int) -> BigCount:
    """Seats not taken at distance 1 when the first person sits at an end: n - b(n, 1)."""
    _check_n(n)
    return n - b(n, 1)


def _longest_run_term(i: int, n: int, b_tab, d_tab) -> BigCount:
    left, right = b_tab[i], b_tab[n + 1 - i]
    dl, dr = d_tab[i], d_tab[n + 1 - i]
    term = 1
    for j in range(n - 1):
        term *= _paired(left[j] + right[j], dl[j] + dr[j])
    return term


def _one_sided_term(p: int, n: int, b_tab, d_tab) -> BigCount:
    row_b, row_d = b_tab[p], d_tab[p]
    term = 1
    for j in range(n - 1):
        term *= _paired(row_b[j], row_d[j])
    return term


def a095236(n: int) -> BigCount:
    """
    Sequences under the longest-run rule: at each distance every pair gets
    one seat before any other seat of that distance is taken.

    Uses the true d values at every distance.

    Args:
        n: Seat count (>= 1)

    Returns:
        A095236(n)
    """
    _check_n(n)
    b_tab, d_tab = _tables(n)
    return sum(_longest_run_term(i, n, b_tab, d_tab) for i in range(1, n + 1))


def a095240(n: int) -> BigCount:
    """
    Longest-run sequences whose first person sits at an end.

    Defined for n >= 2 only.
    """
    _check_n(n, minimum=2)
    b_tab, d_tab = _tables(n)
    return 2 * _one_sided_term(n, n, b_tab, d_tab)


def a095912(n: int) -> BigCount:
    """
    Longest-run sequences that additionally prefer seats with fewer occupied neighbours.

    The extra preference only bites once a row of the form OXOX exists,
    so below n = 4 this equals a095236(n).

    Args:
        n: Seat count (>= 1)

    Returns:
        A095912(n)
    """
    _check_n(n)
    if n < 4:
        return a095236(n)
    b_tab, d_tab = _tables(n)
    ends = 2 * sum(_one_sided_term(p, n, b_tab, d_tab) for p in (n - 1, n))
    middle = sum(_longest_run_term(i, n, b_tab, d_tab) for i in range(3, n - 1))
    return ends + middle


def a_extended(n: int) -> BigCount:
    """
    Sequences under the maximum-distance rule extended by the fewest-occupied-neighbours preference.

    Args:
        n: Seat count (>= 1)

    Returns:
        A_n; equals a(n) below n = 4
    """
    _check_n(n)
    if n < 4:
        return a(n)
    b_tab, d_tab = _tables(n)

    def far_levels(b_row, d_row) -> BigCount:
        product = 1
        for j in range(1, n - 1):
            product *= _free(b_row[j], d_row[j])
        return product

    # first seat at an end
    bn, dn = b_tab[n], d_tab[n]
    total = 2 * _paired(bn[0], dn[0]) * far_levels(bn, dn)

    # first seat next to an end: the outer seat joins the pairs in the first round
    bs, ds = b_tab[n - 1], d_tab[n - 1]
    total += (
        2 * (1 << ds[0]) * factorial(ds[0] + 1) * factorial(bs[0] - ds[0])
        * far_levels(bs, ds)
    )

    for i in range(3, n - 1):
        left, right = b_tab[i], b_tab[n + 1 - i]
        dl, dr = d_tab[i], d_tab[n + 1 - i]
        b_sum = [x + y for x, y in zip(left, right)]
        d_sum = [x + y for x, y in zip(dl, dr)]
        total += _paired(b_sum[0], d_sum[0]) * far_levels(b_sum, d_sum)

    logger.debug("a_extended evaluated", extra={
        "custom_dimensions": {"n": n, "digits": len(str(total))}
    })
    return total


SEQUENCES = {
    'an': a,
    'a166079': a166079,
    'a095236': a095236,
    'a095240': a095240,
    'a095912': a095912,
    'a_ext': a_extended,
}

# First index each sequence is defined for
SEQUENCE_OFFSETS = {name: 1 for name in SEQUENCES}
SEQUENCE_OFFSETS['a095240'] = 2
