"""Words over the orbit alphabet and the bijection with factorizations.

A minimal transitive star factorization f of p maps to the pair (w, k) where
w_i is the index of the cycle met by the i-th factor and k_j is the symbol of
the leftmost factor meeting cycle j (j >= 2). The inverse rebuilds f from the
word, the anchors and the cycles of p.
"""

import re
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

from ..characterization.checks import characterize, meeting_word
from ..core.factorization import StarFactorization
from ..core.permutation import CycleDecomposition, Permutation, cycle_decomposition
from ..utils.errors import CharacterizationError, InvalidAnchorsError, InvalidWordError, WordParseError


@dataclass(frozen=True, order=True)
class CanonicalWord:
    letters: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self) -> str:
        return format_word(self.letters)


@dataclass(frozen=True)
class AnchorTuple:
    """One chosen symbol k_j per cycle j = 2..m, in canonical cycle order."""

    anchors: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "anchors", tuple(self.anchors))

    def __len__(self) -> int:
        return len(self.anchors)

    def __iter__(self):
        return iter(self.anchors)

    def __str__(self) -> str:
        return format_anchors(self.anchors)


def contains_pattern(word: Sequence[int], pattern: Sequence[int]) -> bool:
    """True if ``pattern`` occurs in ``word`` at strictly increasing, not necessarily adjacent, positions."""
    matched = 0
    for letter in word:
        if matched < len(pattern) and letter == pattern[matched]:
            matched += 1
    return matched == len(pattern)


def word_violation(word: Sequence[int], decomp: CycleDecomposition) -> Optional[str]:
    """Describe why ``word`` is outside the word class of ``decomp``, or None if it belongs."""
    m = decomp.m
    lengths = decomp.lengths
    expected = n_letters(decomp)
    if len(word) != expected:
        return f"length {len(word)} != n + m - 2 = {expected}"
    if any(not 1 <= letter <= m for letter in word):
        return f"letters must lie in 1..{m}"
    for j in range(1, m + 1):
        want = lengths[0] - 1 if j == 1 else lengths[j - 1] + 1
        have = sum(1 for letter in word if letter == j)
        if have != want:
            return f"letter {j} occurs {have} times, expected {want}"
    present = sorted(set(word) - {1})
    for a in present:
        if contains_pattern(word, (a, 1, a)):
            return f"contains pattern {a} 1 {a}"
        for b in present:
            if a != b and contains_pattern(word, (a, b, a, b)):
                return f"contains pattern {a} {b} {a} {b}"
    return None


def n_letters(decomp: CycleDecomposition) -> int:
    return decomp.n + decomp.m - 2


def is_valid_word(w: Sequence[int], decomp: CycleDecomposition) -> bool:
    return word_violation(tuple(w), decomp) is None


def anchors_violation(anchors: Sequence[int], decomp: CycleDecomposition) -> Optional[str]:
    orbits = decomp.cycles[1:]
    if len(anchors) != len(orbits):
        return f"expected {len(orbits)} anchors, got {len(anchors)}"
    for j, (k, orbit) in enumerate(zip(anchors, orbits), start=2):
        if k not in orbit:
            return f"anchor {k} is not in cycle {j} {orbit}"
    return None


def phi(f: StarFactorization, p: Permutation) -> Tuple[CanonicalWord, AnchorTuple]:
    """Map a minimal transitive star factorization to its (word, anchors) pair.

    Raises:
        CharacterizationError: If ``f`` is not minimal transitive for ``p``
    """
    report = characterize(f, p)
    if not report.overall:
        raise CharacterizationError(report.first_failure)
    decomp = cycle_decomposition(p)
    word = meeting_word(f, decomp)
    anchors = []
    for j in range(2, decomp.m + 1):
        anchors.append(f.symbols[word.index(j)])
    return CanonicalWord(tuple(word)), AnchorTuple(tuple(anchors))


def phi_inverse(w: CanonicalWord, anchors: AnchorTuple, decomp: CycleDecomposition) -> StarFactorization:
    """Rebuild the factorization whose word and anchors are ``(w, anchors)``.

    Raises:
        InvalidWordError: If ``w`` is outside the word class
        InvalidAnchorsError: If an anchor is missing or lies in the wrong cycle
    """
    letters = tuple(w)
    problem = word_violation(letters, decomp)
    if problem:
        raise InvalidWordError(f"Word {format_word(letters)!r} rejected: {problem}")
    chosen = tuple(anchors)
    problem = anchors_violation(chosen, decomp)
    if problem:
        raise InvalidAnchorsError(f"Anchors {format_anchors(chosen)!r} rejected: {problem}")

    symbols = [0] * len(letters)
    for j in range(1, decomp.m + 1):
        where = [i for i, letter in enumerate(letters) if letter == j]
        length = decomp.lengths[j - 1]
        if j == 1:
            # Right to left the symbols run sigma(1), sigma^2(1), ...
            for t, i in enumerate(where, start=1):
                symbols[i] = decomp.successor(1, length - t)
        else:
            k = chosen[j - 2]
            symbols[where[0]] = symbols[where[-1]] = k
            for t, i in enumerate(where[1:-1], start=2):
                symbols[i] = decomp.successor(k, length + 1 - t)
    return StarFactorization.from_symbols(symbols, decomp.n)


def format_word(letters: Iterable[int]) -> str:
    return " ".join(str(letter) for letter in letters)


def format_anchors(anchors: Iterable[int]) -> str:
    return ",".join(str(k) for k in anchors)


_INT = re.compile(r"\S+")


def _parse_ints(text: str, what: str) -> Tuple[int, ...]:
    values = []
    for match in _INT.finditer(text.replace(",", " ")):
        if not match.group().isdigit():
            raise WordParseError(f"Expected a positive integer in {what}, found {match.group()!r}", match.start())
        values.append(int(match.group()))
    return tuple(values)


def parse_word(text: str) -> CanonicalWord:
    """Parse space-separated letters such as ``"5 5 5 1 3 3"``."""
    return CanonicalWord(_parse_ints(text, "word"))


def parse_anchors(text: str) -> AnchorTuple:
    """Parse comma-separated anchors such as ``"3,10,6,9"``; empty text means no anchors."""
    return AnchorTuple(_parse_ints(text, "anchors"))


def infer_decomposition(w: Sequence[int]) -> CycleDecomposition:
    """The canonical cycle type a word could belong to, read off its letter counts.

    Letter 1 occurring c times gives l_1 = c + 1; letter j >= 2 occurring c times
    gives l_j = c - 1. Cycles are laid out as consecutive blocks starting at 1.

    Raises:
        InvalidWordError: If some letter j >= 2 of 1..max(w) occurs fewer than twice
    """
    m = max(w, default=1)
    counts = [0] * (m + 1)
    for letter in w:
        if letter < 1:
            raise InvalidWordError(f"Letters are positive, got {letter}")
        counts[letter] += 1
    lengths = [counts[1] + 1]
    for j in range(2, m + 1):
        if counts[j] < 2:
            raise InvalidWordError(f"Letter {j} occurs {counts[j]} times; every letter 2..{m} needs at least 2")
        lengths.append(counts[j] - 1)
    cycles = []
    start = 1
    for length in lengths:
        cycles.append(tuple(range(start, start + length)))
        start += length
    return CycleDecomposition(start - 1, tuple(cycles))
