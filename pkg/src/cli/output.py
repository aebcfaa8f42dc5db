"""Output formatting strategies for command payloads."""

import json
from abc import ABC, abstractmethod
from typing import Any, Dict, List

from tabulate import tabulate

from ..utils.logger import get_logger


class BaseFormatter(ABC):
    """Abstract base class for output formatting strategies."""

    def __init__(self):
        self.logger = get_logger(f"starfact.formatters.{self.__class__.__name__}")

    @abstractmethod
    def format(self, payload: Dict[str, Any]) -> str:
        """Format a command payload into the final stdout text."""
        pass


class JsonFormatter(BaseFormatter):
    """JSON with the payload's insertion order, so output is byte-stable."""

    def format(self, payload: Dict[str, Any]) -> str:
        return json.dumps(_public(payload), indent=2)


class TextFormatter(BaseFormatter):
    """Key/value table via tabulate; list-of-rows fields become their own table."""

    def format(self, payload: Dict[str, Any]) -> str:
        rows = []
        tables: List[str] = []
        for key, value in _public(payload).items():
            if isinstance(value, list) and value and isinstance(value[0], dict):
                tables.append(tabulate(value, headers="keys", tablefmt="simple"))
            else:
                rows.append((key, _scalar(value)))
        parts = [tabulate(rows, headers=["field", "value"], tablefmt="simple")] if rows else []
        return "\n\n".join(parts + tables)


class DotFormatter(BaseFormatter):
    """The DOT text of a tree-bearing payload."""

    def format(self, payload: Dict[str, Any]) -> str:
        if "_dot" not in payload:
            raise ValueError("dot output needs a command that produces a tree")
        return payload["_dot"].rstrip("\n")


FORMATTERS = {
    "json": JsonFormatter,
    "text": TextFormatter,
    "dot": DotFormatter,
}


def get_formatter(name: str) -> BaseFormatter:
    if name not in FORMATTERS:
        raise ValueError(f"Unknown output format {name!r}; choose from {', '.join(FORMATTERS)}")
    return FORMATTERS[name]()


def _public(payload: Dict[str, Any]) -> Dict[str, Any]:
    """Drop private keys (prefixed with an underscore)."""
    return {k: v for k, v in payload.items() if not k.startswith("_")}


def _scalar(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (list, tuple)):
        return " ".join(str(v) for v in value)
    return str(value)
