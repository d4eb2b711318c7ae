from __future__ import annotations

"""
Exception hierarchy for pretzelslice.

Every error raised by the library derives from `PretzelError`, itself a
`ValueError`, so callers may catch either. `ConsistencyError` is special:
it signals that an identity which must hold for every valid input failed,
which means a bug rather than a property of the knot.
"""


class PretzelError(ValueError):
    """Base class for all library errors."""


class InvalidTupleError(PretzelError):
    """The twist parameters do not form a valid pretzel tuple."""


class NotAKnotError(PretzelError):
    """The tuple presents a link with more than one component."""


class NotOddKnotError(PretzelError):
    """The operation is only defined for odd pretzel knots."""


class EulerZeroError(PretzelError):
    """The orbifold Euler sum vanishes, so sgn(ê) is undefined."""


class UnitArmError(PretzelError):
    """A negative arm of weight -1 cannot be expanded into a weight-2 chain."""


class SignatureNonzeroError(PretzelError):
    """Normalisation requires a signature-zero knot."""


class NotFiveStrandedError(PretzelError):
    """Normalisation requires exactly five strands."""


class InvalidSolutionError(PretzelError):
    """An embedding solution violates the embedding conditions."""


class DegenerateLatticeError(PretzelError):
    """The vectors ṽ1, ṽ2 do not span a full-rank sublattice of Z^2."""


class DimensionTooLargeError(PretzelError):
    """The generic embedding search refuses forms above its dimension cap."""


class NotPositiveDefiniteError(PretzelError):
    """The form handed to the embedding search is not positive definite."""


class InvalidBoundError(PretzelError):
    """Census bounds are out of range."""


class ConsistencyError(PretzelError):
    """An internal identity failed; the verdict stack cannot be trusted."""
