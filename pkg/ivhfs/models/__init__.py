"""Immutable value types."""
