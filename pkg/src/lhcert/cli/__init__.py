"""CLI for lhcert."""

from lhcert.cli.main import cli

__all__ = ["cli"]
