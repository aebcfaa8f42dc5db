"""Self-test acceptance suite."""

from .base_check import BaseCheck, CheckContext, CheckResult
from .check_registry import CheckRegistry

__all__ = ['BaseCheck', 'CheckContext', 'CheckResult', 'CheckRegistry']
