"""
Brute-force seating process: gap states, candidate rules, counters and insertion schemata
"""

from .gaps import (
    FEWEST_NEIGHBORS,
    LONGEST_RUN,
    LONGEST_RUN_FEWEST_NEIGHBORS,
    PLAIN,
    RULES,
    Candidate,
    GapState,
    RuleVariant,
    candidates,
    seat_candidates,
)
from .oracle import (
    b_census,
    census_outcomes,
    count_sequences,
    count_sequences_first_at,
    count_sequences_naive,
    d_census,
    is_reachable,
    verify_census_invariance,
)
from .schema import SchemaTuple, schema_tuple, simulate_insertions

__all__ = [
    'FEWEST_NEIGHBORS', 'LONGEST_RUN', 'LONGEST_RUN_FEWEST_NEIGHBORS', 'PLAIN', 'RULES',
    'Candidate', 'GapState', 'RuleVariant', 'candidates', 'seat_candidates',
    'b_census', 'census_outcomes', 'count_sequences', 'count_sequences_first_at',
    'count_sequences_naive', 'd_census', 'is_reachable', 'verify_census_invariance',
    'SchemaTuple', 'schema_tuple', 'simulate_insertions',
]
