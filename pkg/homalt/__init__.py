"""Hom-alternative superalgebra toolkit."""

__version__ = '0.1.0'
