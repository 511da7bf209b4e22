"""Shellability, strong shellability and related combinatorial searches."""

__version__ = "0.1.0"
