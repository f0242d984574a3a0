"""Exception hierarchy shared by all modules.

Every error raised on a documented contract violation derives from
:class:`AlgebraError`, so callers (and the CLI) can distinguish "the input
breaks a precondition" from genuine bugs.
"""


class AlgebraError(Exception):
    """Base class for all contract violations raised by this package."""


class MixedSpaces(AlgebraError):
    """Two polynomials over different variable spaces were combined."""


class MixedRings(AlgebraError):
    """Two elements of different quotient rings were combined."""


class UnknownVariable(AlgebraError):
    """A variable name is not declared in the relevant space."""


class NonIntegrable(AlgebraError):
    """Antiderivative requested for a term with exponent -1."""


class NonInvertible(AlgebraError):
    """A non-monomial (or affine-supported) value cannot be inverted."""


class NonInvertibleSubstitution(NonInvertible):
    """Substitution into negative powers needs an invertible monomial."""


class NotUnivariate(AlgebraError):
    """Operation requires a polynomial in a single affine variable."""


class ParseError(AlgebraError):
    """Input text does not match the shared polynomial grammar."""


class NegativeExponentOnAffineVar(ParseError):
    """A negative exponent was applied to an affine-kind variable."""


class NotInImage(AlgebraError):
    """A Laurent polynomial is not in the localization image of the ring."""


class UndeclaredPole(AlgebraError):
    """A denominator factor is not one of the ring's declared poles."""


class NotDivergenceFree(AlgebraError):
    """The divergence-free solver received a field with nonzero divergence."""


class NeedTwoVariables(AlgebraError):
    """The divergence-free solver needs at least two affine variables."""


class NonzeroConstantTerm(AlgebraError):
    """Torus decompositions are only defined for zero constant term."""


class ZeroInput(AlgebraError):
    """The operation is undefined for the zero element."""


class IncompleteReduction(AlgebraError):
    """A reduction chain exceeded its iteration cap (indicates a bug)."""


class WrongDegree(AlgebraError):
    """The operation requires a defining polynomial of a specific degree."""


class NotInEOmega(AlgebraError):
    """The element is not in the divergence image, so no witness exists."""


class ValidationError(AlgebraError):
    """A ring parameter failed validation (surfaced by the CLI, exit 2)."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code
