"""Graphs that embed in one or two consecutive layers of a hypercube."""

__version__ = "0.1.0"
