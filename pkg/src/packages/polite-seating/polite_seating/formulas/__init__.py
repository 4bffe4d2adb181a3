"""
Closed-form counts, bounds and exact integer helpers
"""

from .closed_form import DistanceQuery, b, d, m_index_general, m_index_one
from .counting import a, a166079, a095236, a095240, a095912, a_extended, a_summands
from .bounds import (
    b1_lower,
    b1_upper,
    lemma61_product,
    lower_bound_U,
    upper_bound_O,
)

__all__ = [
    'DistanceQuery', 'b', 'd', 'm_index_general', 'm_index_one',
    'a', 'a166079', 'a095236', 'a095240', 'a095912', 'a_extended', 'a_summands',
    'b1_lower', 'b1_upper', 'lemma61_product', 'lower_bound_U', 'upper_bound_O',
]
