"""Exact interval-valued hesitant fuzzy soft sets and soft topologies."""
__version__ = "1.0.0"
