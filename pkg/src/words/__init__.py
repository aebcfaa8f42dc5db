"""Word class, the factorization/word bijection, enumeration and sampling."""

from .bijection import (
    CanonicalWord,
    AnchorTuple,
    contains_pattern,
    word_violation,
    is_valid_word,
    anchors_violation,
    phi,
    phi_inverse,
    format_word,
    format_anchors,
    parse_word,
    parse_anchors,
    infer_decomposition,
)
from .enumeration import (
    DEFAULT_WORD_GUARD,
    iter_words,
    enumerate_words,
    iter_anchor_tuples,
    enumerate_factorizations,
)
from .sampler import FactorizationSampler, sample_factorization

__all__ = [
    'CanonicalWord', 'AnchorTuple', 'contains_pattern', 'word_violation',
    'is_valid_word', 'anchors_violation', 'phi', 'phi_inverse',
    'format_word', 'format_anchors', 'parse_word', 'parse_anchors', 'infer_decomposition',
    'DEFAULT_WORD_GUARD', 'iter_words', 'enumerate_words', 'iter_anchor_tuples',
    'enumerate_factorizations',
    'FactorizationSampler', 'sample_factorization',
]
