"""
Unit tests for the sequence counts built from the closed forms.
"""

import pytest
from pathlib import Path
import sys

# Add package to path
sys.path.insert(0, str(Path(__file__).parent.parent / "src" / "packages" / "polite-seating"))

from polite_seating.formulas.counting import (
    SEQUENCE_OFFSETS,
    SEQUENCES,
    a,
    a095236,
    a095240,
    a095912,
    a166079,
    a_extended,
    a_summands,
)
from polite_seating.formulas.factorials import factorial

PUBLISHED_A = {
    1: 1, 2: 2, 3: 4, 4: 8, 5: 20, 6: 48, 7: 216, 8: 576, 9: 1392, 10: 7200,
    15: 21611520,
}


class TestA:
    """Test a(n) under the plain rule."""

    @pytest.mark.parametrize("n,expected", sorted(PUBLISHED_A.items()))
    def test_published_values(self, n, expected):
        assert a(n) == expected

    def test_summands_are_mirror_symmetric(self):
        for n in range(1, 65):
            terms = a_summands(n)
            assert len(terms) == n
            assert terms == terms[::-1]

    def test_even_beyond_one(self):
        for n in range(2, 65):
            assert a(n) % 2 == 0, n

    def test_level_one_pairs_overcount(self):
        assert sum(a_summands(6)) == 48
        assert a_summands(6, level_one_pairs=True) == [24, 6, 12, 12, 6, 24]
        assert sum(a_summands(6, level_one_pairs=True)) == 84

    def test_between_n_and_factorial(self):
        for n in range(1, 21):
            assert n <= a(n) <= factorial(n)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            a(0)


class TestVariants:
    """Test the counts for the tie-break variants."""

    @pytest.mark.parametrize("n,expected", [(1, 1), (2, 1), (3, 2), (4, 2), (5, 3), (6, 3), (7, 3)])
    def test_a166079(self, n, expected):
        assert a166079(n) == expected

    def test_longest_run_values(self):
        assert a095236(5) == 16

    def test_fewest_neighbors_values(self):
        assert a095912(4) == 6
        assert a095912(5) == 12
        assert a_extended(4) == 6
        assert a_extended(5) == 16

    def test_variants_agree_below_four(self):
        for n in range(1, 4):
            assert a095912(n) == a095236(n)
            assert a_extended(n) == a(n)

    def test_end_start_count(self):
        assert a095240(2) == 2

    def test_end_start_rejects_one(self):
        with pytest.raises(ValueError):
            a095240(1)

    def test_filters_never_add_sequences(self):
        for n in range(1, 15):
            assert a095912(n) <= a095236(n) <= a(n)
            assert a_extended(n) <= a(n)


class TestSequenceRegistry:
    """Test the name -> formula registry used by the CLI."""

    def test_names(self):
        assert set(SEQUENCES) == {'an', 'a166079', 'a095236', 'a095240', 'a095912', 'a_ext'}

    def test_offsets(self):
        assert SEQUENCE_OFFSETS['a095240'] == 2
        assert all(SEQUENCE_OFFSETS[name] == 1 for name in SEQUENCES if name != 'a095240')

    def test_first_terms_are_defined(self):
        for name, formula in SEQUENCES.items():
            assert formula(SEQUENCE_OFFSETS[name]) >= 1


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
