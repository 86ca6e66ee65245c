"""Exception hierarchy.

Input errors map to CLI exit code 2, contract violations to exit code 3.
"""


class CurveGBError(Exception):
    """Base class for every error raised by this package."""


class InputError(CurveGBError, ValueError):
    """The caller supplied data outside an operation's domain."""


class NotArithmetic(InputError):
    pass


class NonIncreasing(InputError):
    pass


class GcdNotOne(InputError):
    pass


class NotMinimallyGenerated(InputError):
    def __init__(self, generator, message=None):
        self.generator = generator
        super().__init__(message or f"generator {generator} lies in the semigroup of the others")


class TooShort(InputError):
    pass


class NotInSemigroup(InputError):
    pass


class DimensionMismatch(InputError):
    pass


class IndexOutOfRange(InputError):
    pass


class UnsupportedInput(InputError):
    pass


class UnequalWeights(InputError):
    pass


class PreconditionViolation(InputError):
    pass


class NotAGroebnerBasis(InputError):
    pass


class ParseError(InputError):
    pass


class ContractViolation(CurveGBError, AssertionError):
    """An internal invariant failed. Indicates a bug or a broken hypothesis."""


class UniquenessViolation(ContractViolation):
    pass


class IterationCapExceeded(ContractViolation):
    pass


class ResourceLimit(CurveGBError, RuntimeError):
    """A completion exceeded its configured size or degree cap."""
