"""Unit tests for lhcert."""
