"""Computational checks for Schur rings over the transvections of Sp(n, 2)."""

__version__ = "0.1.0"
