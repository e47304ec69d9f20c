"""Probe propagation through sub-vacuum regions of a squeezed background field."""

__version__ = "0.1.0"
