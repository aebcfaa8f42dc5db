"""starfact main entry point."""

import logging
import sys
from pathlib import Path

# Third-party imports
import yaml

# Internal imports
from .cli.commands import cli
from .cli.rich_formatter import CLIFormatter

DEFAULT_CONFIG = {
    'search': {
        'candidate_guard': 10 ** 8,
        'word_guard': 10 ** 7,
        'prune': True,
    },
    'sampling': {'seed': 0},
    'selftest': {
        'n_max': 5,
        'sample_draws': 100_000,
    },
    'logging': {
        'level': 'INFO',
        'file': './logs/starfact.log',
        'verbose': False,
    },
}


def load_config(config_path: Path = None) -> dict:
    """Load configuration from config file.

    Sections missing from the file, or keys missing from a section, fall back
    to ``DEFAULT_CONFIG``.

    Args:
        config_path: YAML file; defaults to ``config/config.yaml`` in the project root

    Returns:
        Configuration dictionary
    """
    config_path = config_path or Path(__file__).parent.parent / 'config' / 'config.yaml'

    try:
        with open(config_path, 'r') as f:
            loaded = yaml.safe_load(f) or {}
    except FileNotFoundError:
        loaded = {}

    config = {}
    for section, defaults in DEFAULT_CONFIG.items():
        config[section] = {**defaults, **(loaded.get(section) or {})}
    return config


def main(argv=None):
    """Main entry point for starfact."""
    try:
        cli.main(args=argv, prog_name="starfact")
    except KeyboardInterrupt:
        CLIFormatter().print_warning("Interrupted")
        sys.exit(130)
    except Exception as e:
        logging.getLogger("starfact").error(f"Fatal error: {str(e)}")
        CLIFormatter().print_error("Fatal error", str(e))
        sys.exit(1)


if __name__ == "__main__":
    main()
