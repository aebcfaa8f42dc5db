"""Exception hierarchy for starfact."""

from typing import Optional


class StarfactError(Exception):
    """Base class for all starfact errors."""


class DegreeMismatchError(StarfactError, ValueError):
    """Raised when permutations or factorizations of different degrees are combined."""

    def __init__(self, left: int, right: int):
        self.left = left
        self.right = right
        super().__init__(f"Incompatible degrees: {left} vs {right}")


class ParseError(StarfactError, ValueError):
    """Base class for text parsing failures; carries the offending position."""

    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"{message}{where}")


class CycleParseError(ParseError):
    """Malformed cycle notation."""


class FactorParseError(ParseError):
    """Malformed factor list (non-1 symbols of star transpositions)."""


class WordParseError(ParseError):
    """Malformed word, anchor list or tree text."""


class GuardExceededError(StarfactError):
    """Raised when an exhaustive search would exceed its candidate budget."""

    def __init__(self, what: str, bound: int, guard: int):
        self.what = what
        self.bound = bound
        self.guard = guard
        super().__init__(
            f"{what}: {bound} candidates exceeds guard {guard}; shrink the instance or raise --guard"
        )


class CharacterizationError(StarfactError, ValueError):
    """Raised when a factorization is not minimal transitive for the target."""

    def __init__(self, failed_check: str):
        self.failed_check = failed_check
        super().__init__(f"Not a minimal transitive star factorization: {failed_check} check failed")


class InvalidWordError(StarfactError, ValueError):
    """Raised when a word is not in the word class of the cycle type."""


class InvalidAnchorsError(StarfactError, ValueError):
    """Raised when an anchor tuple does not pick one element per non-first orbit."""


class TreeError(StarfactError, ValueError):
    """Raised when a bicoloured tree violates one of its structural rules."""

    def __init__(self, violation: str):
        self.violation = violation
        super().__init__(f"Invalid bicoloured tree: {violation}")


class DecompositionError(StarfactError, ValueError):
    """Raised when cycles are not a canonical decomposition of {1,...,n}."""
