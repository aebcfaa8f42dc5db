"""starfact - minimal transitive star factorizations of permutations."""

__version__ = "0.1.0"

# Main entry points
from .main import main, load_config
from .cli.commands import cli, RunConfig
from .cli.rich_formatter import CLIFormatter

__all__ = [
    "main",
    "load_config",
    "cli",
    "RunConfig",
    "CLIFormatter",
]
