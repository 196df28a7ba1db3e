"""Exact block classification and tilting characters for category O of G(3)."""

__version__ = "0.1.0"
