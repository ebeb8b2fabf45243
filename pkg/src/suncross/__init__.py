"""Crossing-number toolkit for products of sunlet and star graphs."""

__version__ = "0.1.0"
