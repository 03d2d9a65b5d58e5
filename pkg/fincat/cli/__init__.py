"""Command-line surface: workspace files in, reports out."""

from fincat.cli._commands import COMMANDS, DEFAULT_FLAGS, run_command
from fincat.cli._report import EXIT_CODES, INPUT_ERROR, Report
from fincat.cli._workspace import parse_text, parse_workspace, Workspace


__all__ = [
    "COMMANDS",
    "DEFAULT_FLAGS",
    "run_command",
    "EXIT_CODES",
    "INPUT_ERROR",
    "Report",
    "parse_text",
    "parse_workspace",
    "Workspace",
]
