"""Subcommand groups; each module registers its parsers on the CLI"""

from . import analysis, extraction, generate

__all__ = ["analysis", "extraction", "generate"]
