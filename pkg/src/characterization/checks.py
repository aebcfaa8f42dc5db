"""Structural characterization of minimal transitive star factorizations.

A star factorization f of p is minimal transitive iff three conditions hold:
occurrence counts per cycle, the cyclic right-to-left order of the factors
meeting each cycle, and non-interleaving (nesting) of the cycles' position sets.
"""

from dataclasses import dataclass
from typing import Dict, List, Sequence

from ..core.factorization import StarFactorization, StarTransposition, evaluate, is_transitive
from ..core.permutation import CycleDecomposition, Permutation, cycle_decomposition
from ..utils.errors import DegreeMismatchError


@dataclass(frozen=True)
class CharacterizationReport:
    """Outcome of the three structural checks."""

    occurrence_ok: bool
    order_ok: bool
    nesting_ok: bool

    @property
    def overall(self) -> bool:
        return self.occurrence_ok and self.order_ok and self.nesting_ok

    @property
    def first_failure(self) -> str:
        """Name of the first failed check, or an empty string."""
        for name, ok in (
            ("occurrence_counts", self.occurrence_ok),
            ("cyclic_order", self.order_ok),
            ("nesting", self.nesting_ok),
        ):
            if not ok:
                return name
        return ""

    def as_dict(self) -> Dict[str, bool]:
        return {
            "occurrence_ok": self.occurrence_ok,
            "order_ok": self.order_ok,
            "nesting_ok": self.nesting_ok,
            "overall": self.overall,
        }


def meets(t: StarTransposition, cycle: Sequence[int]) -> bool:
    """(1 i) meets a cycle when the cycle contains i."""
    return t.other in cycle


def _check_degree(f: StarFactorization, p: Permutation) -> None:
    if f.degree != p.n:
        raise DegreeMismatchError(f.degree, p.n)


def minimal_transitive_length(p: Permutation) -> int:
    """n + m - 2, the least length of a transitive factorization of p."""
    return p.n + cycle_decomposition(p).m - 2


def meeting_word(f: StarFactorization, decomp: CycleDecomposition) -> List[int]:
    """w_i = j when the i-th factor meets the j-th cycle."""
    index = decomp.orbit_index()
    return [index[s] for s in f.symbols]


def _symbols_by_cycle(f: StarFactorization, decomp: CycleDecomposition) -> Dict[int, List[int]]:
    index = decomp.orbit_index()
    by_cycle: Dict[int, List[int]] = {j: [] for j in range(1, decomp.m + 1)}
    for s in f.symbols:
        by_cycle[index[s]].append(s)
    return by_cycle


def is_minimal_transitive(f: StarFactorization, p: Permutation) -> bool:
    """Direct definition: correct product, transitive, and length n + m - 2."""
    _check_degree(f, p)
    return len(f) == minimal_transitive_length(p) and is_transitive(f) and evaluate(f) == p


def check_occurrence_counts(f: StarFactorization, p: Permutation) -> bool:
    """Each cycle avoiding 1 has one symbol used twice and the rest once; the cycle of 1 has each symbol once."""
    _check_degree(f, p)
    decomp = cycle_decomposition(p)
    if len(f) != p.n + decomp.m - 2:
        return False
    counts = [0] * (p.n + 1)
    for s in f.symbols:
        counts[s] += 1
    for j, cycle in enumerate(decomp.cycles, start=1):
        if j == 1:
            if any(counts[s] != 1 for s in cycle[1:]):
                return False
        elif sorted(counts[s] for s in cycle) != [1] * (len(cycle) - 1) + [2]:
            return False
    return True


def check_cyclic_order(f: StarFactorization, p: Permutation) -> bool:
    """Read right to left, the factors meeting each cycle walk along it."""
    if not check_occurrence_counts(f, p):
        return False
    decomp = cycle_decomposition(p)
    for j, symbols in _symbols_by_cycle(f, decomp).items():
        walk = symbols[::-1]
        if j == 1 and walk and walk[0] != p(1):
            return False
        if any(walk[t + 1] != p(walk[t]) for t in range(len(walk) - 1)):
            return False
    return True


def check_nesting(f: StarFactorization, p: Permutation) -> bool:
    """Position sets of distinct cycles never interleave, and the cycle of 1 is never enclosed."""
    _check_degree(f, p)
    decomp = cycle_decomposition(p)
    word = meeting_word(f, decomp)
    positions: Dict[int, List[int]] = {}
    for i, j in enumerate(word):
        positions.setdefault(j, []).append(i)

    for j, where in positions.items():
        for a, b in zip(where, where[1:]):
            for inner in set(word[a + 1:b]):
                if inner == 1:
                    return False
                if positions[inner][0] < a or positions[inner][-1] > b:
                    return False
    return True


def characterize(f: StarFactorization, p: Permutation) -> CharacterizationReport:
    _check_degree(f, p)
    return CharacterizationReport(
        occurrence_ok=check_occurrence_counts(f, p),
        order_ok=check_cyclic_order(f, p),
        nesting_ok=check_nesting(f, p),
    )
