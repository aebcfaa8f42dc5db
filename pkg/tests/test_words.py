"""Tests for the word class, the bijection and its inverse."""

import pytest

from src.characterization import brute_force_enumerate, minimal_transitive_length
from src.core import cycle_decomposition, format_factors, parse_cycles, parse_factors, symmetric_group
from src.counting import anchor_choices, count_words_closed_form, cycle_type_of
from src.utils.errors import (
    CharacterizationError,
    GuardExceededError,
    InvalidAnchorsError,
    InvalidWordError,
    WordParseError,
)
from src.verification.worked_example import WORKED_ANCHORS, WORKED_WORD
from src.words import (
    AnchorTuple,
    CanonicalWord,
    contains_pattern,
    enumerate_factorizations,
    enumerate_words,
    infer_decomposition,
    is_valid_word,
    iter_anchor_tuples,
    parse_anchors,
    parse_word,
    phi,
    phi_inverse,
    word_violation,
)


class TestPatterns:
    """Scattered subword containment."""

    @pytest.mark.parametrize("word,pattern,expected", [
        ((2, 3, 2, 3), (2, 3, 2, 3), True),
        ((2, 4, 3, 4, 2, 3), (2, 3, 2, 3), True),
        ((2, 3, 3, 2), (2, 3, 2, 3), False),
        ((2, 1, 1, 2), (2, 1, 2), True),
        ((1, 2, 2), (2, 1, 2), False),
        ((), (), True),
    ])
    def test_contains_pattern(self, word, pattern, expected):
        assert contains_pattern(word, pattern) is expected


class TestWordClass:
    """Membership and enumeration."""

    def test_worked_word_is_valid(self, worked_decomposition):
        assert is_valid_word(WORKED_WORD, worked_decomposition)

    def test_identity_of_sym3(self):
        words = enumerate_words(cycle_decomposition(parse_cycles("", 3)))
        assert [w.letters for w in words] == [(2, 2, 3, 3), (2, 3, 3, 2), (3, 2, 2, 3), (3, 3, 2, 2)]

    def test_two_transpositions(self, two_transpositions):
        words = enumerate_words(cycle_decomposition(two_transpositions))
        assert [w.letters for w in words] == [(1, 2, 2, 2), (2, 2, 2, 1)]

    def test_single_cycle_has_one_word(self):
        words = enumerate_words(cycle_decomposition(parse_cycles("(1 2 3 4)")))
        assert [w.letters for w in words] == [(1, 1, 1)]

    @pytest.mark.parametrize("word,reason", [
        ((2, 3, 2, 3), "contains pattern 2 3 2 3"),
        ((2, 2, 3), "length 3 != n + m - 2 = 4"),
        ((2, 2, 2, 3), "letter 2 occurs 3 times, expected 2"),
        ((2, 2, 4, 4), "letters must lie in 1..3"),
    ])
    def test_violations_for_identity(self, word, reason):
        assert word_violation(word, cycle_decomposition(parse_cycles("", 3))) == reason

    def test_a1a_is_excluded(self):
        decomp = cycle_decomposition(parse_cycles("(1 2 3)(4 5)"))
        assert word_violation((2, 1, 2, 2, 1), decomp) == "contains pattern 2 1 2"
        assert is_valid_word((1, 1, 2, 2, 2), decomp)

    def test_enumeration_is_sorted_and_valid(self, worked_decomposition):
        words = enumerate_words(worked_decomposition)
        assert len(words) == 6552
        assert words == sorted(words)
        assert all(is_valid_word(w, worked_decomposition) for w in words[:200])

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_count_matches_closed_form(self, n):
        for p in symmetric_group(n):
            decomp = cycle_decomposition(p)
            assert len(enumerate_words(decomp)) == count_words_closed_form(cycle_type_of(p)), str(p)

    def test_guard(self, worked_decomposition):
        with pytest.raises(GuardExceededError):
            enumerate_words(worked_decomposition, guard=1000)

    def test_anchor_tuples(self, two_transpositions):
        anchors = list(iter_anchor_tuples(cycle_decomposition(two_transpositions)))
        assert [a.anchors for a in anchors] == [(3,), (4,)]


class TestBijection:
    """The map to (word, anchors) and back."""

    def test_worked_example_forward(self, worked_factorization, worked_permutation):
        word, anchors = phi(worked_factorization, worked_permutation)
        assert word.letters == WORKED_WORD
        assert anchors.anchors == WORKED_ANCHORS
        assert str(anchors) == "3,10,6,9"

    def test_worked_example_backward(self, worked_factorization, worked_decomposition):
        f = phi_inverse(CanonicalWord(WORKED_WORD), AnchorTuple(WORKED_ANCHORS), worked_decomposition)
        assert f == worked_factorization

    def test_three_cycle_inverse(self, three_cycle):
        f = phi_inverse(parse_word("1 1"), parse_anchors(""), cycle_decomposition(three_cycle))
        assert format_factors(f) == "3 2"

    def test_two_transpositions_inverse(self, two_transpositions):
        decomp = cycle_decomposition(two_transpositions)
        f = phi_inverse(CanonicalWord((1, 2, 2, 2)), AnchorTuple((3,)), decomp)
        assert format_factors(f) == "2 3 4 3"

    def test_rejects_non_factorization(self, three_cycle):
        with pytest.raises(CharacterizationError) as info:
            phi(parse_factors("2 3", 3), three_cycle)
        assert info.value.failed_check == "cyclic_order"

    def test_rejects_invalid_word(self, two_transpositions):
        with pytest.raises(InvalidWordError):
            phi_inverse(CanonicalWord((2, 1, 2, 2)), AnchorTuple((3,)), cycle_decomposition(two_transpositions))

    @pytest.mark.parametrize("anchors", [(), (1,), (2,), (3, 4)])
    def test_rejects_invalid_anchors(self, two_transpositions, anchors):
        with pytest.raises(InvalidAnchorsError):
            phi_inverse(CanonicalWord((1, 2, 2, 2)), AnchorTuple(anchors), cycle_decomposition(two_transpositions))

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_round_trips(self, n):
        for p in symmetric_group(n):
            decomp = cycle_decomposition(p)
            found = brute_force_enumerate(p, True, minimal_transitive_length(p))
            images = set()
            for f in found:
                word, anchors = phi(f, p)
                assert phi_inverse(word, anchors, decomp) == f
                images.add((word, anchors))
            assert len(images) == len(found)
            assert len(found) == len(enumerate_words(decomp)) * anchor_choices(cycle_type_of(p))

    @pytest.mark.parametrize("text,n", [("(1 2)(3 4)", 4), ("(1 3)(2)(4 5)", 5), ("", 4)])
    def test_enumeration_through_inverse_matches_brute_force(self, text, n):
        p = parse_cycles(text, n)
        built = enumerate_factorizations(cycle_decomposition(p))
        found = brute_force_enumerate(p, True, minimal_transitive_length(p))
        assert sorted(f.symbols for f in built) == [f.symbols for f in found]


class TestTextForms:
    """Word and anchor parsing."""

    def test_parse_word(self):
        assert parse_word("5 5 5 1").letters == (5, 5, 5, 1)
        assert str(parse_word("1  2")) == "1 2"

    def test_parse_anchors(self):
        assert parse_anchors("3,10,6,9").anchors == (3, 10, 6, 9)
        assert parse_anchors("").anchors == ()

    @pytest.mark.parametrize("text", ["1 a", "1 -2"])
    def test_parse_word_rejects(self, text):
        with pytest.raises(WordParseError):
            parse_word(text)

    def test_infer_decomposition(self):
        decomp = infer_decomposition(WORKED_WORD)
        assert decomp.lengths == (3, 1, 4, 1, 2)
        assert decomp.cycles[0] == (1, 2, 3)
        assert infer_decomposition((1, 1, 1)).lengths == (4,)

    def test_infer_decomposition_rejects_rare_letter(self):
        with pytest.raises(InvalidWordError):
            infer_decomposition((1, 2))
