"""Exception types shared across the package."""


class OrepiError(Exception):
    """Base class for all orepi errors."""


class CtxMismatch(OrepiError):
    """Operands live in different coefficient fields."""


class DivisionByZero(OrepiError):
    """Inversion of zero, or a fraction with zero denominator."""


class DenominatorVanishes(OrepiError):
    """A specialization sends a denominator to zero."""


class UnassignedParameter(OrepiError):
    """A specialization is missing a parameter value."""


class ZeroInput(OrepiError):
    """Zero passed where a nonzero field element is required."""


class ParseError(OrepiError):
    """Malformed coefficient or polynomial expression."""


class ZeroParameter(OrepiError):
    """A family parameter that must be a unit is zero."""


class DownUpNotNoetherian(OrepiError):
    """Down-up algebras need beta != 0 to be Noetherian (equivalently, a domain)."""


class NonAntisymmetricLambda(OrepiError):
    """Lambda matrix fails lambda_ii = 1 or lambda_ij * lambda_ji = 1."""


class OrientationFailure(OrepiError):
    """A rewrite rule's right side is not strictly below its left side."""


class LemmaRangeError(OrepiError):
    """Identity index outside the lemma's stated range."""


class FamilyMismatch(OrepiError):
    """Lemma or witness applied to the wrong algebra family."""


class NonConfluentPresentation(OrepiError):
    """Operation requires a confluent rule set."""


class HypothesisNotMet(OrepiError):
    """A proposition's hypothesis fails for the given parameters."""

    def __init__(self, reason):
        super().__init__(reason)
        self.reason = reason


class RootsRequired(OrepiError):
    """Quadratic roots are not extractable in this field; pass them explicitly."""


class BetaZero(OrepiError):
    """beta = 0 forbidden (generalized Weyl form needs it invertible)."""


class TrivialCenter(OrepiError):
    """The center is just the scalars; no generators to return."""


class PreconditionViolation(OrepiError):
    """Family-specific validity condition for a decider fails."""


class QFactorialVanishes(OrepiError):
    """A Gaussian binomial denominator q-factorial is zero."""


class NotPrimitiveRoot(OrepiError):
    """Matrix model needs a primitive n-th root of unity."""


class SizeMismatch(OrepiError):
    """Matrices of different sizes (or contexts) mixed."""


class DegreeTooLarge(OrepiError):
    """Multilinear search degree exceeds the factorial-growth guard."""
