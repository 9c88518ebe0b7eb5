"""Unit tests for fastica-kit."""
