"""Algebra modules: monomial ideals, simplicial complexes, Betti tables and path closed forms."""
