"""Facet ideals of matching complexes of paths: exact computation and verification."""

__version__ = "0.1.0"
