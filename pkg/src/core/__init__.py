"""Permutation and star-factorization algebra."""

from .permutation import (
    Permutation,
    CycleDecomposition,
    compose,
    cycle_decomposition,
    format_cycles,
    parse_cycles,
    induced_permutation,
    symmetric_group,
)
from .factorization import (
    StarTransposition,
    StarFactorization,
    evaluate,
    is_transitive,
    parse_factors,
    format_factors,
)

__all__ = [
    'Permutation', 'CycleDecomposition', 'compose', 'cycle_decomposition',
    'format_cycles', 'parse_cycles', 'induced_permutation', 'symmetric_group',
    'StarTransposition', 'StarFactorization', 'evaluate', 'is_transitive',
    'parse_factors', 'format_factors',
]
