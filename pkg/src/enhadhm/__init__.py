"""Exact computations with representations of the enhanced ADHM quiver."""

__version__ = "0.1.0"
