"""Krein string machinery for the two-sided exit problem of Lévy processes."""

__version__ = '0.1.0'
