"""Exact dominated chromatic number solver and verification harness."""

__version__ = "0.1.0"
