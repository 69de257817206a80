"""Integration tests for lhcert."""
