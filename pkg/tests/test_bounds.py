"""
Unit tests for the bounds on a(n) and on b(p, 1).
"""

import pytest
from fractions import Fraction
from pathlib import Path
import sys

# Add package to path
sys.path.insert(0, str(Path(__file__).parent.parent / "src" / "packages" / "polite-seating"))

from polite_seating.formulas.bounds import (
    BoundQuery,
    b1_lower,
    b1_upper,
    comparison_row,
    comparison_table,
    dyadic_sum_lower,
    far_distance_sum,
    lemma61_product,
    lower_bound_b1,
    lower_bound_U,
    upper_bound_b1,
    upper_bound_O,
)
from polite_seating.formulas.closed_form import b
from polite_seating.formulas.counting import a
from polite_seating.formulas.factorials import factorial

PUBLISHED_U = {2: 2, 3: 2, 4: 4, 5: 6, 6: 12, 7: 28, 8: 48, 9: 120, 10: 240, 15: 44640}
PUBLISHED_O = {
    1: 1, 2: 2, 3: 6, 4: 20, 5: 72, 6: 288, 7: 1392, 8: 7200, 9: 38880, 10: 250560,
    15: 6531840000,
}


class TestPublishedTable:
    """Test U and O against the published comparison table."""

    @pytest.mark.parametrize("n,expected", sorted(PUBLISHED_U.items()))
    def test_lower_bound(self, n, expected):
        assert lower_bound_U(n) == expected

    @pytest.mark.parametrize("n,expected", sorted(PUBLISHED_O.items()))
    def test_upper_bound(self, n, expected):
        assert upper_bound_O(n) == expected

    def test_lower_bound_undefined_at_one(self):
        with pytest.raises(ValueError):
            lower_bound_U(1)


class TestSandwich:
    """Test that the bounds enclose a(n)."""

    def test_u_below_a_below_o(self):
        for n in range(2, 31):
            assert lower_bound_U(n) <= a(n) <= upper_bound_O(n)

    def test_intermediate_chain(self):
        for n in range(2, 31):
            assert lower_bound_U(n) <= lower_bound_b1(n) <= a(n) <= upper_bound_b1(n)

    def test_intermediate_upper_below_o(self):
        for n in range(2, 65):
            assert upper_bound_b1(n) <= upper_bound_O(n), n

    def test_intermediate_upper_values(self):
        assert upper_bound_b1(6) == 216
        assert upper_bound_b1(7) == 1008

    def test_b1_sandwich(self):
        for p in range(1, 100_001):
            assert b1_lower(p) <= b(p, 1) <= b1_upper(p)

    def test_b1_bounds_reject_nonpositive(self):
        with pytest.raises(ValueError):
            b1_lower(0)
        with pytest.raises(ValueError):
            b1_upper(0)


class TestFactorialProducts:
    """Test the dyadic factorial product and the far-distance sum."""

    @pytest.mark.parametrize("p,expected", [(1, 1), (4, 1), (5, 1), (9, 1), (17, 2), (33, 48)])
    def test_dyadic_product_values(self, p, expected):
        assert lemma61_product(p) == expected

    def test_dyadic_product_below_factorials(self):
        for p in range(5, 201):
            product = 1
            for j in range(2, p):
                product *= factorial(b(p, j))
            assert lemma61_product(p) <= product, p

    def test_far_distance_sum_bound(self):
        for n in range(2, 41):
            assert dyadic_sum_lower(n) <= far_distance_sum(n)

    def test_bound_query(self):
        assert BoundQuery.of(10, 3).m_i is None
        assert BoundQuery.of(10, 9).m_i == 1
        assert BoundQuery.of(20, 17).dyadic_product == 2
        with pytest.raises(ValueError):
            BoundQuery.of(5, 6)


class TestComparisonTable:
    """Test the rows behind the bounds command."""

    def test_row_one_has_no_lower_bound(self):
        row = comparison_row(1)
        assert row.lower is None
        assert row.lower_ratio is None
        assert row.upper_ratio == 1

    def test_row_six(self):
        row = comparison_row(6)
        assert (row.lower, row.count, row.upper, row.factorial_n) == (12, 48, 288, 720)
        assert row.upper_ratio == 6
        assert row.lower_ratio == Fraction(1, 4)

    def test_row_seven_ratio(self):
        assert comparison_row(7).lower_ratio == Fraction(28, 216)

    def test_extra_rows(self):
        rows = comparison_table(10, extra=[15, 3, 15])
        assert [row.n for row in rows] == list(range(1, 11)) + [15]
        assert rows[-1].count == 21611520

    def test_rejects_empty_table(self):
        with pytest.raises(ValueError):
            comparison_table(0)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
