"""Connectivity oracles for plane graphs under vertex and edge failures."""

__version__ = "0.1.0"
