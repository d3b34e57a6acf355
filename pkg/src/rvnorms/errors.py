"""Exception types shared across the package."""


class ParseError(ValueError):
    """Malformed input text or file (matrix JSON, distribution string)."""


class PreconditionError(ValueError):
    """Input violates a documented precondition of an operation."""


class NonHermitianError(PreconditionError):
    """A Hermitian matrix was required."""


class MomentExistenceError(PreconditionError):
    """The requested moment order does not exist for the distribution."""
