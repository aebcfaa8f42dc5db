"""Verification of minimal transitive star factorizations."""

from .checks import (
    CharacterizationReport,
    meets,
    meeting_word,
    minimal_transitive_length,
    is_minimal_transitive,
    check_occurrence_counts,
    check_cyclic_order,
    check_nesting,
    characterize,
)
from .oracle import (
    DEFAULT_CANDIDATE_GUARD,
    brute_force_enumerate,
    candidate_count,
    has_shorter_transitive,
    shortest_star_length,
)

__all__ = [
    'CharacterizationReport', 'meets', 'meeting_word', 'minimal_transitive_length',
    'is_minimal_transitive', 'check_occurrence_counts', 'check_cyclic_order',
    'check_nesting', 'characterize',
    'DEFAULT_CANDIDATE_GUARD', 'brute_force_enumerate', 'candidate_count',
    'has_shorter_transitive', 'shortest_star_length',
]
