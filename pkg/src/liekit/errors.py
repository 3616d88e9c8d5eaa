"""Exception types shared across the package.

Two families matter to callers: input/validation problems (CLI exit code 2)
and resource-cap overruns (CLI exit code 3).
"""


class LiekitError(Exception):
    """Base class for all package errors."""


class ValidationError(LiekitError):
    """Bad input: malformed matrices, weights, files, diagrams."""


class ResourceCapError(LiekitError):
    """A configured size/depth cap was exceeded."""


class NotCartan(ValidationError):
    def __init__(self, reason):
        self.reason = reason
        super().__init__(f"not a Cartan matrix: {reason}")


class UnsupportedType(ValidationError):
    pass


class Reducible(ValidationError):
    pass


class DimensionMismatch(ValidationError):
    pass


class IndexOutOfRange(ValidationError):
    pass


class NotDominant(ValidationError):
    pass


class NotMinuscule(ValidationError):
    pass


class BadConstantTerm(ValidationError):
    pass


class NotPrimitive(ValidationError):
    def __init__(self, witness, msg="series is not primitive"):
        self.witness = witness
        super().__init__(f"{msg} (witness: {witness})")


class InvalidFile(ValidationError):
    pass


class JacobiFailure(ValidationError):
    pass


class NotDiagonalizable(ValidationError):
    pass


class BadInvolution(ValidationError):
    pass


class BadColoring(ValidationError):
    pass


class NotBlack(ValidationError):
    pass


class OuterNotTabulated(ValidationError):
    pass


class Unclassified(LiekitError):
    pass


class SizeMismatch(ValidationError):
    pass


class OrbitTooLarge(ResourceCapError):
    pass


class TooLarge(ResourceCapError):
    pass


class TooDeep(ResourceCapError):
    pass
