"""Star transpositions (1 i) and ordered star factorizations."""

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Tuple

from .permutation import Permutation
from ..utils.errors import DegreeMismatchError, FactorParseError


@dataclass(frozen=True, order=True)
class StarTransposition:
    """The transposition (1 other)."""

    other: int

    def __post_init__(self):
        if self.other < 2:
            raise ValueError(f"A star transposition swaps 1 with a symbol >= 2, got {self.other}")

    def __str__(self) -> str:
        return f"(1 {self.other})"


@dataclass(frozen=True)
class StarFactorization:
    """An ordered list of star transpositions in Sym(degree)."""

    degree: int
    factors: Tuple[StarTransposition, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        if self.degree < 1:
            raise ValueError(f"Degree must be at least 1, got {self.degree}")
        for factor in self.factors:
            if factor.other > self.degree:
                raise ValueError(f"Factor {factor} lies outside Sym({self.degree})")

    @classmethod
    def from_symbols(cls, symbols: Iterable[int], degree: int) -> "StarFactorization":
        return cls(degree, tuple(StarTransposition(s) for s in symbols))

    @property
    def symbols(self) -> Tuple[int, ...]:
        """The non-1 symbol of every factor, left to right."""
        return tuple(factor.other for factor in self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def __iter__(self) -> Iterator[StarTransposition]:
        return iter(self.factors)

    def __add__(self, other: "StarFactorization") -> "StarFactorization":
        if self.degree != other.degree:
            raise DegreeMismatchError(self.degree, other.degree)
        return StarFactorization(self.degree, self.factors + other.factors)

    def reversed(self) -> "StarFactorization":
        return StarFactorization(self.degree, self.factors[::-1])

    def __str__(self) -> str:
        return format_factors(self)


def evaluate(f: StarFactorization) -> Permutation:
    """Product of the factors, rightmost applied first; the empty product is the identity."""
    images = list(range(1, f.degree + 1))
    # Right-multiplying by (1 i) swaps the images of 1 and i.
    for other in f.symbols:
        images[0], images[other - 1] = images[other - 1], images[0]
    return Permutation(f.degree, tuple(images))


def is_transitive(f: StarFactorization) -> bool:
    """True iff the factors generate a group acting transitively on [n].

    Every star transposition moves 1, so this holds iff each of 2..n is touched.
    """
    return set(f.symbols) >= set(range(2, f.degree + 1))


_TOKEN = re.compile(r"\S+")


def parse_factors(text: str, degree: int) -> StarFactorization:
    """Parse the compact factor format: the non-1 symbols, whitespace or comma separated.

    Raises:
        FactorParseError: On a token that is not an integer in 2..degree
    """
    symbols = []
    for match in _TOKEN.finditer(text.replace(",", " ")):
        token = match.group()
        if not token.isdigit():
            raise FactorParseError(f"Expected a symbol, found {token!r}", match.start())
        value = int(token)
        if not 2 <= value <= degree:
            raise FactorParseError(f"Symbol {value} out of range 2..{degree}", match.start())
        symbols.append(value)
    return StarFactorization.from_symbols(symbols, degree)


def format_factors(f: StarFactorization) -> str:
    return " ".join(str(s) for s in f.symbols)
