"""Base components for the self-test checks."""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Dict

from ..counting import formulas
from ..counting.cycle_type import CycleType
from ..utils.logger import get_logger


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    details: str = ""

    def as_dict(self) -> Dict[str, Any]:
        return {"name": self.name, "passed": self.passed, "details": self.details}


@dataclass(frozen=True)
class CheckContext:
    """Parameters shared by every check in one self-test run."""

    n_max: int = 5
    guard: int = 10 ** 8
    sample_draws: int = 100_000
    seed: int = 0
    fault: bool = False

    def theorem_count(self, ct: CycleType) -> int:
        """The library's minimal transitive count, off by one when ``fault`` is set."""
        count = formulas.count_minimal_transitive(ct)
        return count + 1 if self.fault else count


class BaseCheck(ABC):
    """Base class for all self-test checks."""

    name: str = ""

    def __init__(self):
        self.logger = get_logger(f"starfact.checks.{self.__class__.__name__}")

    @property
    @abstractmethod
    def description(self) -> str:
        """One-line description shown in the summary."""
        pass

    @abstractmethod
    def run(self, context: CheckContext) -> CheckResult:
        """Execute the check."""
        pass

    def passed(self, details: str = "") -> CheckResult:
        return CheckResult(self.name, True, details)

    def failed(self, details: str) -> CheckResult:
        self.logger.error(f"{self.name} failed: {details}")
        return CheckResult(self.name, False, details)
