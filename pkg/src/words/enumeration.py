"""Lexicographic enumeration of the word class of a cycle type."""

from itertools import product
from typing import Iterator, List

from .bijection import AnchorTuple, CanonicalWord, phi_inverse
from ..core.factorization import StarFactorization
from ..core.permutation import CycleDecomposition
from ..counting.cycle_type import CycleType
from ..counting.formulas import anchor_choices, count_words_closed_form
from ..utils.errors import GuardExceededError
from ..utils.logger import get_logger

DEFAULT_WORD_GUARD = 10 ** 7

logger = get_logger("starfact.words")


def iter_words(decomp: CycleDecomposition) -> Iterator[CanonicalWord]:
    """Yield every word of the class in lexicographic order.

    A prefix stays extendable iff letter 1 is only placed while no other letter
    is open, and an open letter j is only repeated while it is the most recently
    opened one still open. These two rules are exactly the excluded patterns
    a1a and abab read prefix by prefix.
    """
    m = decomp.m
    total = [0] + [decomp.lengths[0] - 1] + [length + 1 for length in decomp.lengths[1:]]
    remaining = list(total)
    size = sum(total)
    open_stack: List[int] = []
    prefix: List[int] = []

    def extend() -> Iterator[CanonicalWord]:
        if len(prefix) == size:
            yield CanonicalWord(tuple(prefix))
            return
        for j in range(1, m + 1):
            if not remaining[j]:
                continue
            if j == 1:
                if open_stack:
                    continue
                remaining[1] -= 1
                prefix.append(1)
                yield from extend()
                prefix.pop()
                remaining[1] += 1
                continue
            opening = remaining[j] == total[j]
            if not opening and open_stack[-1] != j:
                continue
            if opening:
                open_stack.append(j)
            remaining[j] -= 1
            closing = remaining[j] == 0
            if closing:
                open_stack.pop()
            prefix.append(j)
            yield from extend()
            prefix.pop()
            if closing:
                open_stack.append(j)
            remaining[j] += 1
            if opening:
                open_stack.pop()

    yield from extend()


def enumerate_words(decomp: CycleDecomposition, guard: int = DEFAULT_WORD_GUARD) -> List[CanonicalWord]:
    """All words of the class, lexicographically sorted.

    Raises:
        GuardExceededError: If the class is larger than ``guard``
    """
    expected = count_words_closed_form(CycleType(decomp.lengths))
    if expected > guard:
        raise GuardExceededError("word enumeration", expected, guard)
    words = list(iter_words(decomp))
    logger.debug(f"enumerated {len(words)} words for cycle type {decomp.lengths}")
    return words


def iter_anchor_tuples(decomp: CycleDecomposition) -> Iterator[AnchorTuple]:
    """Row-major over the orbits 2..m in canonical order."""
    for anchors in product(*decomp.cycles[1:]):
        yield AnchorTuple(anchors)


def enumerate_factorizations(decomp: CycleDecomposition, guard: int = DEFAULT_WORD_GUARD) -> List[StarFactorization]:
    """Every minimal transitive star factorization, built through the inverse bijection.

    Ordered by word, then by anchor tuple.
    """
    ct = CycleType(decomp.lengths)
    total = count_words_closed_form(ct) * anchor_choices(ct)
    if total > guard:
        raise GuardExceededError("factorization enumeration", total, guard)
    return [
        phi_inverse(word, anchors, decomp)
        for word in enumerate_words(decomp, guard=guard)
        for anchors in iter_anchor_tuples(decomp)
    ]
