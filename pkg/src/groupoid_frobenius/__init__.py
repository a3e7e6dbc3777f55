"""Exact computations with finite groupoids, Frobenius algebras and formal groups."""

__version__ = "0.1.0"
