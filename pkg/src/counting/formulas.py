"""Exact closed-form counts of star factorizations.

All arithmetic is on Python integers; no floating point is used anywhere here.
"""

from math import comb, factorial, prod

from .cycle_type import CycleType


def _exact_quotient(numerator: int, denominator: int, what: str) -> int:
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise ArithmeticError(f"{what}: {denominator} does not divide {numerator}")
    return quotient


def count_minimal_transitive(ct: CycleType) -> int:
    """Minimal transitive star factorizations: (n+m-2)! l_1...l_m / n!."""
    n, m = ct.n, ct.m
    return _exact_quotient(
        factorial(n + m - 2) * prod(ct.lengths), factorial(n), "minimal transitive count"
    )


def count_minimal(ct: CycleType) -> int:
    """Minimal star factorizations with k non-1 fixed points: (n+m-2(k+1))! l_1...l_m / (n-k)!."""
    n, m, k = ct.n, ct.m, ct.fixed_count_k
    return _exact_quotient(
        factorial(n + m - 2 * (k + 1)) * prod(ct.lengths), factorial(n - k), "minimal count"
    )


def pak_count(k_len: int, m_cycles: int) -> int:
    """Factorizations of a permutation fixing 1 with m cycles of length k: k^m (mk+m)! / n!, n = mk+1."""
    if k_len < 2 or m_cycles < 1:
        raise ValueError(f"Need k >= 2 and m >= 1, got k={k_len}, m={m_cycles}")
    n = m_cycles * k_len + 1
    return _exact_quotient(
        k_len ** m_cycles * factorial(m_cycles * k_len + m_cycles), factorial(n), "Pak count"
    )


def count_words_closed_form(ct: CycleType) -> int:
    """Size of the word class (equivalently the tree class): l_1 (m-2)! C(n+m-2, m-2)."""
    n, m = ct.n, ct.m
    if m == 1:
        return 1
    return ct.first_length * factorial(m - 2) * comb(n + m - 2, m - 2)


def anchor_choices(ct: CycleType) -> int:
    """Number of anchor tuples: l_2 ... l_m."""
    return prod(ct.lengths[1:])


def pak_cycle_type(k_len: int, m_cycles: int) -> CycleType:
    """The type (1, k, ..., k) that Pak's formula specializes."""
    return CycleType((1,) + (k_len,) * m_cycles)
