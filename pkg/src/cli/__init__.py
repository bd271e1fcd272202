"""
Módulo de línea de comandos.
"""

from .app import main, build_parser, CliArgumentParser, EXIT_OK, EXIT_ARGUMENT, EXIT_NUMERICAL

__all__ = ["main", "build_parser", "CliArgumentParser", "EXIT_OK", "EXIT_ARGUMENT", "EXIT_NUMERICAL"]
