"""Exception hierarchy shared by all quasidisc modules."""


class QuasidiscError(Exception):
    """Base class for all library errors."""


class ZeroPolynomialError(QuasidiscError):
    """An operation received the zero polynomial where a nonzero one is required."""


class DegreeTooLowError(QuasidiscError):
    """The polynomial degree is below the operation's minimum."""


class InvalidParameterError(QuasidiscError):
    """A family parameter or argument violates its domain constraints."""


class InvalidRecurrenceError(QuasidiscError):
    """A three-term recurrence coefficient that must be nonzero is zero."""


class NotApplicableError(QuasidiscError):
    """The operation is not defined for this polynomial family."""


class PoleEncounteredError(QuasidiscError):
    """A compact formula denominator vanished; the caller must fall back."""


class NotPrimeError(QuasidiscError):
    """The argument passed as a prime is not prime."""


class EvenPrimeError(QuasidiscError):
    """p = 2 was passed to an odd-prime-only operation."""


class MalformedCurveError(QuasidiscError):
    """The curve polynomial is not an admissible even-degree integral model."""


class DuplicateNodesError(QuasidiscError):
    """Quadrature nodes must be pairwise distinct."""


class InconclusiveVerdictError(QuasidiscError):
    """A local-solvability search exhausted its depth budget."""

    def __init__(self, r: int, p: int, depth_used: int):
        self.r = r
        self.p = p
        self.depth_used = depth_used
        super().__init__(
            f"local solvability of curve r={r} at p={p} inconclusive "
            f"after depth {depth_used}; raise max_depth"
        )
