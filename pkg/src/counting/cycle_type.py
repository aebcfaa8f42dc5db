"""Cycle types with the cycle containing 1 distinguished."""

from collections import Counter
from dataclasses import dataclass
from typing import Dict, Sequence, Tuple

from ..core.permutation import MAX_DEGREE, Permutation, cycle_decomposition
from ..utils.errors import CycleParseError


@dataclass(frozen=True)
class CycleType:
    """Cycle lengths (l_1, ..., l_m) of a permutation of [n]; l_1 belongs to the cycle of 1."""

    lengths: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "lengths", tuple(self.lengths))
        if not self.lengths:
            raise ValueError("A cycle type has at least one cycle")
        if any(length < 1 for length in self.lengths):
            raise ValueError(f"Cycle lengths must be positive, got {self.lengths}")

    @property
    def n(self) -> int:
        return sum(self.lengths)

    @property
    def m(self) -> int:
        return len(self.lengths)

    @property
    def first_length(self) -> int:
        return self.lengths[0]

    @property
    def fixed_count_k(self) -> int:
        """Fixed points other than 1."""
        return sum(1 for length in self.lengths[1:] if length == 1)

    @property
    def multiplicities(self) -> Dict[int, int]:
        """b_j: how many of l_2, ..., l_m equal j."""
        return dict(sorted(Counter(self.lengths[1:]).items()))

    def representative(self) -> Permutation:
        """A permutation of this type: 1..l_1 as the first cycle, then consecutive blocks."""
        cycles = []
        start = 1
        for length in self.lengths:
            cycles.append(tuple(range(start, start + length)))
            start += length
        return Permutation.from_cycles(cycles, self.n)

    def without_fixed_points(self) -> "CycleType":
        """Type of the induced permutation on [n] minus the non-1 fixed points."""
        return CycleType((self.lengths[0],) + tuple(l for l in self.lengths[1:] if l != 1))


def cycle_type_of(p: Permutation) -> CycleType:
    return CycleType(cycle_decomposition(p).lengths)


def cycle_type_from_lengths(lengths: Sequence[int]) -> CycleType:
    return CycleType(tuple(lengths))


def parse_lengths(text: str) -> CycleType:
    """Parse ``"3,1,4,1,2"``; the first entry is the length of the cycle containing 1."""
    parts = [part.strip() for part in text.replace(" ", ",").split(",") if part.strip()]
    if not parts or not all(part.isdigit() and int(part) > 0 for part in parts):
        raise CycleParseError(f"Expected comma-separated positive lengths, got {text!r}")
    lengths = tuple(int(part) for part in parts)
    if sum(lengths) > MAX_DEGREE:
        raise CycleParseError(f"Lengths sum to {sum(lengths)}, above the largest supported degree {MAX_DEGREE}")
    return CycleType(lengths)
