"""Exact partition statistics, least r-gaps and truncated q-series."""

__version__ = "0.1.0"
