"""Exact combinatorics of multiplexes, ordinary polytopes and multiplicial polytopes."""

__version__ = "0.1.0"
