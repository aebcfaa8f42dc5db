"""Closed-form counts."""

from .cycle_type import CycleType, cycle_type_of, cycle_type_from_lengths, parse_lengths
from .formulas import (
    count_minimal_transitive,
    count_minimal,
    pak_count,
    count_words_closed_form,
    anchor_choices,
    pak_cycle_type,
)

__all__ = [
    'CycleType', 'cycle_type_of', 'cycle_type_from_lengths', 'parse_lengths',
    'count_minimal_transitive', 'count_minimal', 'pak_count',
    'count_words_closed_form', 'anchor_choices', 'pak_cycle_type',
]
