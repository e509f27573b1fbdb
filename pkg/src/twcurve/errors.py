"""Exception types shared across the library."""


class TWError(Exception):
    """Base class for all library errors."""


class ZeroDivisorDetected(TWError):
    """Inversion hit a zero divisor, certifying the defining polynomial is reducible.

    ``factor`` holds the coefficients (low to high, Fractions) of a nontrivial
    factor of the minimal polynomial found by the extended Euclidean algorithm.
    """

    def __init__(self, factor, message="zero divisor: defining polynomial is reducible"):
        super().__init__(message)
        self.factor = tuple(factor)


class OrderUndetermined(TWError):
    """A series is zero up to its truncation order, so its order is unknown."""


class PrecisionExhausted(TWError):
    """Series refinement hit the configured cap without resolving the request."""


class NeedsExtension(TWError):
    """A required root does not lie in the ambient field.

    ``pending`` holds the coefficients of a polynomial (low to high) one of
    whose roots must be adjoined before the expansion can continue.
    """

    def __init__(self, pending, message="root not in the ambient field"):
        super().__init__(message)
        self.pending = tuple(pending)


class AmbiguousBranch(TWError):
    """The branch choice does not single out a place; ``options`` lists the candidates."""

    def __init__(self, options, message="branch choice under-determines the place"):
        super().__init__(f"{message}; options: {options}")
        self.options = options


class InvalidBranchChoice(TWError):
    """A branch decision referenced a segment or root index that does not exist."""


class NoBranchAtCenter(TWError):
    """No branch of the curve passes through the requested center."""


class NoRelation(TWError):
    """No linear dependence exists on the given monomials, or certification kept failing."""


class NonUniqueRelation(TWError):
    """The dependence among the given monomials is not unique up to scale."""


class NotPolynomial(TWError):
    """The function cannot be written as a polynomial in the generators."""


class BoundExhausted(TWError):
    """The degree bound escalation hit its cap without finding an expression."""


class MismatchedCertificates(TWError):
    """Two canonical curves do not share normal forms and distinguished monomials."""


class InfiniteFamily(TWError):
    """The scaling system is rank deficient; solutions form a positive-dimensional family."""


class GcdNotOne(TWError):
    """The supplied pole orders have a common factor and cannot generate a full semigroup."""


class WrongPoleOrders(TWError):
    """The supplied generators do not realize the minimal generators of their semigroup."""


class JobSpecError(TWError):
    """Problem with an input job file; carries a location when one is known."""

    def __init__(self, message, line=None, column=None):
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + loc)
        self.line = line
        self.column = column
