"""Tests for uniform sampling of minimal transitive factorizations."""

from collections import Counter

import pytest

from src.characterization import is_minimal_transitive
from src.core import format_factors, parse_cycles
from src.utils.errors import GuardExceededError
from src.words import FactorizationSampler, sample_factorization


class TestFactorizationSampler:
    """Seeded draws through the inverse bijection."""

    def test_deterministic_for_fixed_seed(self, two_transpositions):
        first = FactorizationSampler(two_transpositions, seed=7)
        second = FactorizationSampler(two_transpositions, seed=7)
        assert [first.draw() for _ in range(20)] == [second.draw() for _ in range(20)]

    def test_draws_are_factorizations(self, worked_permutation):
        sampler = FactorizationSampler(worked_permutation, seed=3)
        for _ in range(50):
            assert is_minimal_transitive(sampler.draw(), worked_permutation)

    def test_single_cycle_always_unique(self):
        p = parse_cycles("(1 2 3 4)")
        assert {format_factors(sample_factorization(p, seed=s)) for s in range(10)} == {"4 3 2"}

    def test_transposition_fixing_one(self):
        p = parse_cycles("(2 3)")
        sampler = FactorizationSampler(p, seed=0)
        tally = Counter(format_factors(sampler.draw()) for _ in range(10_000))
        assert set(tally) == {"2 3 2", "3 2 3"}
        for count in tally.values():
            assert abs(count / 10_000 - 0.5) <= 0.02

    def test_all_four_reachable(self, two_transpositions):
        seen = {format_factors(sample_factorization(two_transpositions, seed=s)) for s in range(200)}
        assert seen == {"2 3 4 3", "2 4 3 4", "3 4 3 2", "4 3 4 2"}

    def test_guard(self, worked_permutation):
        with pytest.raises(GuardExceededError):
            FactorizationSampler(worked_permutation, guard=100)
