"""Centralized command session logging using Rich for clean, readable logs."""

import logging
import os
import time
from typing import Optional

from rich.console import Console
from rich.logging import RichHandler


class CommandSessionLogger:
    """Logger for one CLI invocation: command start, outcome and check results."""

    def __init__(self, log_file: str = "logs/starfact.log", verbose: bool = False):
        """Initialize the session logger.

        Args:
            log_file: Path to log file
            verbose: If True, also echo log records to stderr through Rich
        """
        self.verbose = verbose
        self.console = Console(stderr=True)
        self.current_command = None
        self.command_start_time = None

        self._setup_logger(log_file)

    def _setup_logger(self, log_file: str):
        """Set up logger with Rich handler and file output."""
        self.logger = logging.getLogger("starfact.session")
        self.logger.setLevel(logging.DEBUG if self.verbose else logging.INFO)

        # Clear existing handlers
        if self.logger.handlers:
            self.logger.handlers.clear()

        # Prevent propagation to avoid duplicate logs
        self.logger.propagate = False

        # Stderr only, stdout carries command output
        if self.verbose:
            rich_handler = RichHandler(
                console=self.console,
                show_time=True,
                show_path=False,
                markup=False
            )
            rich_handler.setLevel(logging.DEBUG)
            self.logger.addHandler(rich_handler)

        log_dir = os.path.dirname(log_file)
        if log_dir:
            os.makedirs(log_dir, exist_ok=True)
        file_handler = logging.FileHandler(log_file)
        file_handler.setFormatter(
            logging.Formatter('%(asctime)s - %(name)s - %(message)s')
        )
        file_handler.setLevel(logging.INFO)
        self.logger.addHandler(file_handler)

    def log_command_start(self, command: str, perm_text: Optional[str] = None):
        """Log the start of a CLI command."""
        self.current_command = command
        self.command_start_time = time.time()

        perm_part = f" perm={perm_text!r}" if perm_text is not None else ""
        self.logger.info(f"[>] COMMAND START: {command}{perm_part}")

    def log_command_success(self, summary: str):
        """Log successful command completion."""
        duration = self._elapsed()

        summary_preview = summary[:100] + "..." if len(summary) > 100 else summary
        summary_preview = summary_preview.replace('\n', ' ').strip()

        self.logger.info(f"[+] COMMAND SUCCESS ({duration:.2f}s): {self.current_command}")
        self.logger.info(f"   [R] Result: {summary_preview}")
        self._reset_command_state()

    def log_command_error(self, error: str, exit_code: int):
        """Log command failure."""
        duration = self._elapsed()
        self.logger.error(f"[-] COMMAND FAILED ({duration:.2f}s, exit {exit_code}): {error}")
        self._reset_command_state()

    def log_check(self, name: str, passed: bool, details: Optional[str] = None):
        """Log the outcome of one self-test check."""
        mark = "+" if passed else "-"
        details_part = f" | {details}" if details else ""
        self.logger.info(f"   [{mark}] CHECK {name}{details_part}")

    def log_guard_skip(self, what: str, bound: int, guard: int):
        """Log an exhaustive search skipped because of the candidate guard."""
        self.logger.info(f"   [G] GUARD: {what} skipped ({bound} > {guard})")

    def _elapsed(self) -> float:
        return time.time() - self.command_start_time if self.command_start_time else 0.0

    def _reset_command_state(self):
        """Reset command tracking state."""
        self.current_command = None
        self.command_start_time = None
