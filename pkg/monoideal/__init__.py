"""Exact computations with monomial ideals."""

__version__ = "0.1.0"
