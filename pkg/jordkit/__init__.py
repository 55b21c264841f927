"""Exact-arithmetic Jordan superalgebras."""

__version__ = "0.1.0"
