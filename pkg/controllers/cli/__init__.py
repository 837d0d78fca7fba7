"""Command-line interface for the topology engine."""

from .main import build_parser, main, run

__all__ = ["build_parser", "main", "run"]
