"""Check registry for organizing and running the self-test suite."""

from typing import Dict, List

from .base_check import BaseCheck, CheckContext, CheckResult
from .checks import (
    BijectionRoundTripCheck,
    CharacterizationEquivalenceCheck,
    ClosedFormCheck,
    CorollaryCheck,
    PermCoreRoundTripCheck,
    SamplingUniformityCheck,
    TheoremOracleCheck,
    TreeBijectionCheck,
    WorkedExampleCheck,
)
from ..utils.logger import get_logger


class CheckRegistry:
    """Registry of named self-test checks, run in registration order."""

    def __init__(self):
        self.logger = get_logger("starfact.check_registry")
        self.checks = self._register_checks()

    def _register_checks(self) -> Dict[str, BaseCheck]:
        """Register all available checks."""
        checks = [
            PermCoreRoundTripCheck(),
            WorkedExampleCheck(),
            TheoremOracleCheck(),
            CharacterizationEquivalenceCheck(),
            BijectionRoundTripCheck(),
            CorollaryCheck(),
            ClosedFormCheck(),
            TreeBijectionCheck(),
            SamplingUniformityCheck(),
        ]
        registered = {check.name: check for check in checks}
        self.logger.info(f"Registered {len(registered)} checks: {list(registered.keys())}")
        return registered

    def run_check(self, name: str, context: CheckContext) -> CheckResult:
        """Run a check by name; an exception counts as a failure of that check."""
        if name not in self.checks:
            available = ", ".join(self.checks.keys())
            return CheckResult(name, False, f"Check '{name}' not found. Available checks: {available}")

        try:
            result = self.checks[name].run(context)
            self.logger.debug(f"Check {name} finished: passed={result.passed}")
            return result

        except Exception as e:
            error_msg = f"Error running check {name}: {e}"
            self.logger.error(error_msg)
            return CheckResult(name, False, error_msg)

    def run_all(self, context: CheckContext) -> List[CheckResult]:
        return [self.run_check(name, context) for name in self.checks]

    def get_check_names(self) -> List[str]:
        return list(self.checks.keys())

    def get_check_descriptions(self) -> Dict[str, str]:
        return {name: check.description for name, check in self.checks.items()}
