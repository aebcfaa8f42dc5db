"""Permutations of [n] and their canonical cycle decomposition.

Symbols are 1-based throughout. Permutations multiply right to left:
``compose(p, q)(j) == p(q(j))``.
"""

from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from ..utils.errors import CycleParseError, DecompositionError, DegreeMismatchError

MAX_DEGREE = 10 ** 6


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1,...,n}; ``images[i - 1]`` is the image of ``i``."""

    n: int
    images: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))
        if self.n < 1:
            raise ValueError(f"Degree must be at least 1, got {self.n}")
        if len(self.images) != self.n:
            raise ValueError(f"Expected {self.n} images, got {len(self.images)}")
        if sorted(self.images) != list(range(1, self.n + 1)):
            raise ValueError(f"Images {self.images} are not a permutation of 1..{self.n}")

    def __call__(self, j: int) -> int:
        return self.images[j - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __str__(self) -> str:
        return format_cycles(self)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(n, tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> "Permutation":
        """Build a permutation of degree ``n`` from disjoint cycles; unlisted symbols are fixed."""
        images = list(range(1, n + 1))
        for cycle in cycles:
            for i, symbol in enumerate(cycle):
                images[symbol - 1] = cycle[(i + 1) % len(cycle)]
        return cls(n, tuple(images))

    def inverse(self) -> "Permutation":
        images = [0] * self.n
        for i, image in enumerate(self.images, start=1):
            images[image - 1] = i
        return Permutation(self.n, tuple(images))

    def is_identity(self) -> bool:
        return all(image == i for i, image in enumerate(self.images, start=1))


@dataclass(frozen=True)
class CycleDecomposition:
    """Canonical cycles: sorted by least element, each rotated to start at it."""

    n: int
    cycles: Tuple[Tuple[int, ...], ...]
    lengths: Tuple[int, ...] = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "cycles", tuple(tuple(c) for c in self.cycles))
        object.__setattr__(self, "lengths", tuple(len(c) for c in self.cycles))
        if sum(self.lengths) != self.n:
            raise DecompositionError(f"Cycle lengths {self.lengths} do not sum to {self.n}")
        symbols = sorted(s for cycle in self.cycles for s in cycle)
        if symbols != list(range(1, self.n + 1)):
            raise DecompositionError(f"Cycles {self.cycles} do not partition 1..{self.n}")
        for cycle in self.cycles:
            if not cycle or cycle[0] != min(cycle):
                raise DecompositionError(f"Cycle {cycle} does not start at its least element")
        leasts = [cycle[0] for cycle in self.cycles]
        if leasts != sorted(leasts):
            raise DecompositionError(f"Cycles {self.cycles} are not ordered by least element")

    @property
    def m(self) -> int:
        """Number of cycles (orbits), fixed points included."""
        return len(self.cycles)

    def orbit_index(self) -> List[int]:
        """Map symbol -> 1-based index of its cycle; entry 0 is unused."""
        index = [0] * (self.n + 1)
        for j, cycle in enumerate(self.cycles, start=1):
            for symbol in cycle:
                index[symbol] = j
        return index

    def successor(self, symbol: int, steps: int = 1) -> int:
        """Image of ``symbol`` under ``steps`` applications of its own cycle."""
        for cycle in self.cycles:
            if symbol in cycle:
                return cycle[(cycle.index(symbol) + steps) % len(cycle)]
        raise ValueError(f"Symbol {symbol} not in 1..{self.n}")

    def to_permutation(self) -> Permutation:
        return Permutation.from_cycles(self.cycles, self.n)


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return ``p q``, i.e. ``j -> p(q(j))``.

    Raises:
        DegreeMismatchError: If the degrees differ
    """
    if p.n != q.n:
        raise DegreeMismatchError(p.n, q.n)
    return Permutation(p.n, tuple(p.images[image - 1] for image in q.images))


def cycle_decomposition(p: Permutation) -> CycleDecomposition:
    """Canonical cycle decomposition of ``p``, fixed points included."""
    seen = [False] * (p.n + 1)
    cycles = []
    for start in range(1, p.n + 1):
        if seen[start]:
            continue
        cycle = []
        symbol = start
        while not seen[symbol]:
            seen[symbol] = True
            cycle.append(symbol)
            symbol = p(symbol)
        cycles.append(tuple(cycle))
    return CycleDecomposition(p.n, tuple(cycles))


def format_cycles(p: Permutation) -> str:
    """Cycle notation in canonical order, fixed points included."""
    return "".join(
        "(" + " ".join(str(s) for s in cycle) + ")"
        for cycle in cycle_decomposition(p).cycles
    )


def parse_cycles(text: str, n: Optional[int] = None) -> Permutation:
    """Parse cycle notation such as ``"(1 8 2)(3)(4 5 10 7)"``.

    Args:
        text: Cycles in parentheses; symbols separated by whitespace or commas
        n: Degree; inferred as the largest symbol mentioned when omitted

    Returns:
        The permutation; unmentioned symbols are fixed points

    Raises:
        CycleParseError: On malformed syntax, repeated or out-of-range symbols
    """
    if n is not None and not 1 <= n <= MAX_DEGREE:
        raise CycleParseError(f"Degree must be an integer in 1..{MAX_DEGREE}, got {n}")

    cycles: List[Tuple[int, ...]] = []
    seen = set()
    pos = 0
    length = len(text)

    def skip_ws(i: int) -> int:
        while i < length and text[i].isspace():
            i += 1
        return i

    def read_int(i: int) -> Tuple[int, int]:
        start = i
        while i < length and text[i].isdigit():
            i += 1
        if start == i:
            found = repr(text[start]) if start < length else "end of input"
            raise CycleParseError(f"Expected a symbol, found {found}", start)
        value = int(text[start:i])
        if value < 1:
            raise CycleParseError(f"Symbols are positive integers, got {value}", start)
        if value > MAX_DEGREE:
            raise CycleParseError(f"Symbol {value} exceeds the largest supported degree {MAX_DEGREE}", start)
        if n is not None and value > n:
            raise CycleParseError(f"Symbol {value} exceeds degree {n}", start)
        if value in seen:
            raise CycleParseError(f"Repeated symbol {value}", start)
        seen.add(value)
        return value, i

    pos = skip_ws(pos)
    while pos < length:
        if text[pos] != "(":
            raise CycleParseError(f"Expected '(', found {text[pos]!r}", pos)
        pos = skip_ws(pos + 1)
        symbol, pos = read_int(pos)
        cycle = [symbol]
        while True:
            after = skip_ws(pos)
            if after < length and text[after] == ")":
                pos = after + 1
                break
            if after < length and text[after] == ",":
                after = skip_ws(after + 1)
            elif after == pos:
                found = repr(text[pos]) if pos < length else "end of input"
                raise CycleParseError(f"Expected separator or ')', found {found}", pos)
            symbol, pos = read_int(after)
            cycle.append(symbol)
        cycles.append(tuple(cycle))
        pos = skip_ws(pos)

    if n is None:
        if not seen:
            raise CycleParseError("Cannot infer the degree of an empty cycle list; pass n")
        n = max(seen)
    return Permutation.from_cycles(cycles, n)


def induced_permutation(p: Permutation) -> Tuple[Permutation, Tuple[int, ...]]:
    """Restrict ``p`` to [n] minus its fixed points other than 1, relabelling order-preservingly.

    Returns:
        Tuple of (induced permutation, kept symbols in increasing order); kept
        symbol ``kept[i - 1]`` is relabelled ``i``
    """
    kept = tuple(s for s in range(1, p.n + 1) if s == 1 or p(s) != s)
    relabel = {s: i for i, s in enumerate(kept, start=1)}
    return Permutation(len(kept), tuple(relabel[p(s)] for s in kept)), kept


def symmetric_group(n: int) -> Iterator[Permutation]:
    """Every permutation of [n], in lexicographic order of image tuples."""
    for images in permutations(range(1, n + 1)):
        yield Permutation(n, images)
