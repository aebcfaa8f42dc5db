"""Shared fixtures: the Sym(11) worked example and small permutations."""

import sys
from pathlib import Path

import pytest

# Add the project root to path for test imports
root_path = Path(__file__).parent.parent
if str(root_path) not in sys.path:
    sys.path.insert(0, str(root_path))

from src.core import StarFactorization, cycle_decomposition, parse_cycles
from src.verification.worked_example import (
    WORKED_DEGREE,
    WORKED_FACTORS,
    WORKED_PERMUTATION_TEXT,
)


@pytest.fixture(scope="session")
def worked_permutation():
    """(1 8 2)(3)(4 5 10 7)(6)(9 11) in Sym(11)."""
    return parse_cycles(WORKED_PERMUTATION_TEXT, WORKED_DEGREE)


@pytest.fixture(scope="session")
def worked_decomposition(worked_permutation):
    return cycle_decomposition(worked_permutation)


@pytest.fixture(scope="session")
def worked_factorization():
    return StarFactorization.from_symbols(WORKED_FACTORS, WORKED_DEGREE)


@pytest.fixture
def two_transpositions():
    """(1 2)(3 4): four minimal transitive factorizations."""
    return parse_cycles("(1 2)(3 4)", 4)


@pytest.fixture
def three_cycle():
    return parse_cycles("(1 2 3)")
