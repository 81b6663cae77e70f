"""Exceptions raised by the algebra package."""


class AlgebraError(ValueError):
    """Base class for invalid inputs to an algebraic operation."""


class VariableIndexError(AlgebraError):
    """A variable index lies outside [1, nvars]."""


class NonSquarefreeError(AlgebraError):
    """A product of monomials would repeat a variable."""


class AmbientMismatchError(AlgebraError):
    """Two ideals live in polynomial rings with different numbers of variables."""


class DegenerateIdealError(AlgebraError):
    """The zero or unit ideal was passed where a proper ideal is required."""


class VoidComplexError(AlgebraError):
    """The void complex was passed where a nonvoid complex is required."""


class ParameterRangeError(AlgebraError):
    """An integer parameter lies outside the range an operation accepts."""


class HochsterLimitError(AlgebraError):
    """A Hochster sweep was requested above the configured variable limit."""


class BettiConsistencyError(AlgebraError):
    """A computed Betti table contradicts the generator degrees of its ideal."""
