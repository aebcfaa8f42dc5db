"""Exhaustive search over star-transposition sequences.

This is the ground truth the closed-form counts and the bijections are checked
against, so it is deliberately naive: every sequence of the requested length is
visited in lexicographic order of its symbols, with optional pruning that
never removes a solution.
"""

from typing import List, Optional

from ..core.factorization import StarFactorization
from ..core.permutation import Permutation, cycle_decomposition
from ..utils.errors import GuardExceededError
from ..utils.logger import get_logger

DEFAULT_CANDIDATE_GUARD = 10 ** 8

logger = get_logger("starfact.oracle")


def candidate_count(n: int, length: int) -> int:
    """Number of star-transposition sequences of the given length in Sym(n)."""
    return (n - 1) ** length


def check_guard(n: int, length: int, guard: int) -> None:
    bound = candidate_count(n, length)
    if bound > guard:
        raise GuardExceededError(f"brute force over Sym({n}) at length {length}", bound, guard)


def brute_force_enumerate(
    p: Permutation,
    transitive_required: bool,
    length: int,
    guard: int = DEFAULT_CANDIDATE_GUARD,
    prune: bool = True,
) -> List[StarFactorization]:
    """All star factorizations of ``p`` of exactly ``length`` factors.

    Args:
        p: Target permutation
        transitive_required: Keep only factorizations touching every symbol 2..n
        length: Number of factors
        guard: Maximum number of candidate sequences, (n-1)^length
        prune: Apply occurrence-count pruning; only takes effect for transitive
            searches at the minimal length n + m - 2, where it is exact

    Returns:
        Factorizations in lexicographic order of their symbol sequences

    Raises:
        GuardExceededError: If (n-1)^length exceeds the guard
    """
    n = p.n
    check_guard(n, length, guard)
    logger.debug(f"brute force: n={n} length={length} transitive={transitive_required} "
                 f"candidates={candidate_count(n, length)}")

    decomp = cycle_decomposition(p)
    caps: Optional[List[int]] = None
    if prune and transitive_required and length == n + decomp.m - 2:
        # A symbol of the cycle of 1 is used once; any other symbol at most twice.
        caps = [0] * (n + 1)
        for j, cycle in enumerate(decomp.cycles, start=1):
            for s in cycle:
                caps[s] = 1 if j == 1 else 2

    target = list(p.images)
    images = list(range(1, n + 1))
    counts = [0] * (n + 1)
    prefix: List[int] = []
    results: List[StarFactorization] = []
    untouched = [n - 1]

    def extend(depth: int) -> None:
        if depth == length:
            if images == target and (not transitive_required or untouched[0] == 0):
                results.append(StarFactorization.from_symbols(prefix, n))
            return
        if caps is not None and untouched[0] > length - depth:
            return
        for s in range(2, n + 1):
            if caps is not None and counts[s] >= caps[s]:
                continue
            counts[s] += 1
            if counts[s] == 1:
                untouched[0] -= 1
            prefix.append(s)
            images[0], images[s - 1] = images[s - 1], images[0]
            extend(depth + 1)
            images[0], images[s - 1] = images[s - 1], images[0]
            prefix.pop()
            if counts[s] == 1:
                untouched[0] += 1
            counts[s] -= 1

    extend(0)
    logger.debug(f"brute force: {len(results)} factorizations found")
    return results


def has_shorter_transitive(p: Permutation, guard: int = DEFAULT_CANDIDATE_GUARD) -> bool:
    """True if some transitive star factorization is shorter than n + m - 2."""
    minimal = p.n + cycle_decomposition(p).m - 2
    return any(
        brute_force_enumerate(p, True, length, guard=guard, prune=False)
        for length in range(minimal)
    )


def shortest_star_length(p: Permutation, max_length: int, guard: int = DEFAULT_CANDIDATE_GUARD) -> Optional[int]:
    """Least length admitting any star factorization of ``p``, or None up to ``max_length``."""
    for length in range(max_length + 1):
        if brute_force_enumerate(p, False, length, guard=guard, prune=False):
            return length
    return None
