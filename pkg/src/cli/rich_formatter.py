"""Rich-based CLI formatting for starfact.

Centralized Rich formatting for the CLI. Everything here goes to stderr so that
stdout carries only the machine-readable command output.
"""

from typing import Iterable

# Third-party imports
from rich.console import Console
from rich.markup import escape
from rich.panel import Panel
from rich.table import Table


class CLIFormatter:
    """Centralized Rich formatting for CLI - keeps rich isolated to CLI layer."""

    def __init__(self, console: Console = None):
        """Initialize the formatter."""
        self.console = console or Console(stderr=True)

    def print_error(self, message, details=None):
        """Format error messages."""
        error_panel = Panel(
            f"[bold red]Error:[/bold red] {escape(str(message))}" +
            (f"\n[dim]{escape(str(details))}[/dim]" if details else ""),
            border_style="red",
            title="Error"
        )
        self.console.print(error_panel)

    def print_warning(self, message):
        """Format warning messages."""
        self.console.print(f"[yellow][!] {escape(str(message))}[/yellow]")

    def print_info(self, message):
        """Format info messages."""
        self.console.print(f"[blue][i] {escape(str(message))}[/blue]")

    def print_check_summary(self, results: Iterable, descriptions: dict):
        """Format the self-test outcome as a table."""
        table = Table(title="Self-test", show_header=True, header_style="bold magenta")
        table.add_column("Check", style="cyan", no_wrap=True)
        table.add_column("Status")
        table.add_column("Details", style="yellow")

        for result in results:
            status = "[green][+] pass[/green]" if result.passed else "[red][-] FAIL[/red]"
            details = result.details or descriptions.get(result.name, "")
            table.add_row(result.name, status, escape(details))

        self.console.print(table)

    def create_loading_indicator(self, message):
        """Create a loading indicator context manager."""
        return self.console.status(message, spinner="dots")
