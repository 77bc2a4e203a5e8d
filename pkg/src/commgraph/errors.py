"""Exception types shared across the package."""


class CommgraphError(Exception):
    """Base class for all package-specific errors."""


class IndexOutOfRange(CommgraphError, IndexError):
    """An element or vertex index is outside the valid range."""


class NonBijectiveGenerator(CommgraphError, ValueError):
    """A generator image array is not a permutation."""


class OrderMismatch(CommgraphError, ValueError):
    """A declared group order disagrees with the computed one."""

    def __init__(self, expected, actual):
        super().__init__(f"expected order {expected}, got {actual}")
        self.expected = expected
        self.actual = actual


class ClosureLimitExceeded(CommgraphError, RuntimeError):
    """Closure enumeration exceeded the configured element cap."""


class NotASubgroup(CommgraphError, ValueError):
    """An element set is not closed under the group operation."""


class NotNormal(CommgraphError, ValueError):
    """A subgroup is not normal in its parent group."""


class BadParameter(CommgraphError, ValueError):
    """A group-family parameter is outside its valid range."""


class UnsupportedParameter(CommgraphError, ValueError):
    """A group-family parameter is valid but not supported by this build."""


class SizeCap(CommgraphError, RuntimeError):
    """A product construction would exceed the configured size cap."""


class NotCentral(CommgraphError, ValueError):
    """An element required to be central is not."""


class FieldMismatch(CommgraphError, ValueError):
    """Field elements from different fields were mixed."""


class DivisionByZero(CommgraphError, ZeroDivisionError):
    """Multiplicative inverse of the zero field element."""


class BadQ(CommgraphError, ValueError):
    """The prime power q is excluded for the requested matrix witness."""


class LengthCapExceeded(CommgraphError, ValueError):
    """A hole search was requested beyond the configured length cap."""


class ParseError(CommgraphError, ValueError):
    """A catalog file line failed to parse."""

    def __init__(self, lineno, message):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class OrderValidationFailed(CommgraphError, ValueError):
    """A catalog entry's generators do not generate the declared order."""

    def __init__(self, order, index, computed):
        super().__init__(
            f"entry [{order},{index}] generates a group of order {computed}"
        )
        self.order = order
        self.index = index
        self.computed = computed


class DuplicateID(CommgraphError, ValueError):
    """Two catalog entries share the same (order, index) ID."""


class IncompleteCoverage(CommgraphError, ValueError):
    """A scan was asked to count an order without complete catalog coverage."""

    def __init__(self, order):
        super().__init__(f"catalog coverage for order {order} is not complete")
        self.order = order


class NotFrobenius(CommgraphError, ValueError):
    """A Frobenius verification check failed; the message names the check."""
