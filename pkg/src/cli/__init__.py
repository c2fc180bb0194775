"""Command-line module - report commands and application runner."""
from src.cli.commands import ReportAPI, RunConfig, build_parser
from src.cli.app import create_app, exit_code_for, run

__all__ = ["ReportAPI", "RunConfig", "build_parser", "create_app", "exit_code_for", "run"]
