"""Command-line interface components."""

from .commands import cli, RunConfig, HANDLERS
from .output import get_formatter

__all__ = ['cli', 'RunConfig', 'HANDLERS', 'get_formatter']
