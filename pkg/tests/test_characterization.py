"""Tests for the structural characterization and the brute-force oracle."""

from itertools import product

import pytest

from src.characterization import (
    brute_force_enumerate,
    candidate_count,
    characterize,
    check_cyclic_order,
    check_nesting,
    check_occurrence_counts,
    has_shorter_transitive,
    is_minimal_transitive,
    meeting_word,
    meets,
    minimal_transitive_length,
    shortest_star_length,
)
from src.core import (
    StarFactorization,
    StarTransposition,
    cycle_decomposition,
    format_factors,
    parse_cycles,
    parse_factors,
    symmetric_group,
)
from src.counting import count_minimal_transitive, cycle_type_of
from src.utils.errors import DegreeMismatchError, GuardExceededError


class TestCharacterization:
    """The three structural checks."""

    def test_worked_example_passes_everything(self, worked_factorization, worked_permutation):
        report = characterize(worked_factorization, worked_permutation)
        assert report.overall
        assert report.first_failure == ""
        assert report.as_dict() == {
            "occurrence_ok": True,
            "order_ok": True,
            "nesting_ok": True,
            "overall": True,
        }

    def test_meeting_word(self, worked_factorization, worked_decomposition):
        assert meeting_word(worked_factorization, worked_decomposition) == [5, 5, 5, 1, 3, 3, 2, 2, 3, 3, 4, 4, 3, 1]

    def test_meets(self):
        assert meets(StarTransposition(8), (1, 8, 2))
        assert not meets(StarTransposition(3), (1, 8, 2))

    def test_wrong_order_fails_cyclic_order(self, three_cycle):
        report = characterize(parse_factors("2 3", 3), three_cycle)
        assert report.occurrence_ok
        assert not report.order_ok
        assert report.nesting_ok
        assert report.first_failure == "cyclic_order"

    def test_right_order(self, three_cycle):
        assert characterize(parse_factors("3 2", 3), three_cycle).overall

    def test_wrong_length_fails_occurrence(self, three_cycle):
        f = parse_factors("3 2 3 3", 3)
        assert not check_occurrence_counts(f, three_cycle)
        assert not check_cyclic_order(f, three_cycle)

    def test_interleaving_fails_nesting(self):
        p = parse_cycles("", 3)
        # 2 3 2 3 interleaves the two fixed points.
        f = parse_factors("2 3 2 3", 3)
        assert check_occurrence_counts(f, p)
        assert not check_nesting(f, p)
        assert not is_minimal_transitive(f, p)

    def test_first_cycle_may_not_be_enclosed(self):
        p = parse_cycles("(1 2)(3 4)", 4)
        f = parse_factors("3 2 4 3", 4)
        assert not check_nesting(f, p)

    def test_degree_mismatch(self, three_cycle):
        with pytest.raises(DegreeMismatchError):
            characterize(parse_factors("2 3", 4), three_cycle)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_agrees_with_definition(self, n):
        for p in symmetric_group(n):
            length = minimal_transitive_length(p)
            for symbols in product(range(2, n + 1), repeat=length):
                f = StarFactorization.from_symbols(symbols, n)
                assert characterize(f, p).overall == is_minimal_transitive(f, p), f"{p}: {f}"

    @pytest.mark.slow
    def test_agrees_with_definition_in_sym4(self):
        for p in symmetric_group(4):
            length = minimal_transitive_length(p)
            for symbols in product(range(2, 5), repeat=length):
                f = StarFactorization.from_symbols(symbols, 4)
                assert characterize(f, p).overall == is_minimal_transitive(f, p), f"{p}: {f}"


class TestBruteForce:
    """Exhaustive search."""

    def test_lexicographic_order(self, two_transpositions):
        found = brute_force_enumerate(two_transpositions, True, 4)
        assert [format_factors(f) for f in found] == ["2 3 4 3", "2 4 3 4", "3 4 3 2", "4 3 4 2"]

    def test_three_cycle_is_unique(self, three_cycle):
        assert [format_factors(f) for f in brute_force_enumerate(three_cycle, True, 2)] == ["3 2"]

    def test_identity_of_sym2(self):
        found = brute_force_enumerate(parse_cycles("", 2), True, 2)
        assert [f.symbols for f in found] == [(2, 2)]

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_matches_formula(self, n):
        for p in symmetric_group(n):
            found = brute_force_enumerate(p, True, minimal_transitive_length(p))
            assert len(found) == count_minimal_transitive(cycle_type_of(p)), str(p)

    @pytest.mark.slow
    def test_matches_formula_in_sym5(self):
        for p in symmetric_group(5):
            found = brute_force_enumerate(p, True, minimal_transitive_length(p))
            assert len(found) == count_minimal_transitive(cycle_type_of(p)), str(p)

    @pytest.mark.parametrize("text,n", [("(1 2)(3 4)", 4), ("(2 3)", 4), ("", 4), ("(1 2 3 4)", 4)])
    def test_pruning_never_drops_solutions(self, text, n):
        p = parse_cycles(text, n)
        length = minimal_transitive_length(p)
        assert brute_force_enumerate(p, True, length) == brute_force_enumerate(p, True, length, prune=False)

    def test_every_result_is_minimal_transitive(self, two_transpositions):
        for f in brute_force_enumerate(two_transpositions, True, 4):
            assert is_minimal_transitive(f, two_transpositions)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_reversal_factorizes_the_inverse(self, n):
        for p in symmetric_group(n):
            inverse = p.inverse()
            for f in brute_force_enumerate(p, True, minimal_transitive_length(p)):
                assert is_minimal_transitive(f.reversed(), inverse)

    def test_guard(self, worked_permutation):
        assert candidate_count(11, 14) == 10 ** 14
        with pytest.raises(GuardExceededError) as info:
            brute_force_enumerate(worked_permutation, True, 14, guard=10 ** 8)
        assert info.value.bound == 10 ** 14
        assert info.value.guard == 10 ** 8

    def test_non_transitive_search(self):
        p = parse_cycles("(1 2)", 4)
        found = brute_force_enumerate(p, False, 1)
        assert [f.symbols for f in found] == [(2,)]


class TestShorterLengths:
    """Nothing exists below the minimal lengths."""

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_no_shorter_transitive(self, n):
        for p in symmetric_group(n):
            assert not has_shorter_transitive(p), str(p)

    @pytest.mark.parametrize("text,n,expected", [
        ("(1 2)", 2, 1),
        ("", 3, 0),
        ("(2 3)", 3, 3),
        ("(1 2 3)", 3, 2),
    ])
    def test_shortest_star_length(self, text, n, expected):
        assert shortest_star_length(parse_cycles(text, n), 6) == expected

    def test_shortest_star_length_gives_up(self):
        assert shortest_star_length(parse_cycles("(2 3)", 3), 2) is None
