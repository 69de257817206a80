"""Tests for lhcert."""
