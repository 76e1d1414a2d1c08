"""Exception types shared across the package."""


class TwoECError(Exception):
    """Base class for all errors raised by this package."""


class InvalidCost(TwoECError):
    """An edge cost is negative or not an exact rational."""


class InvalidNode(TwoECError):
    """A node index is outside the declared node range."""


class TooSmall(TwoECError):
    """The instance has fewer than two nodes."""


class InfeasibleInstance(TwoECError):
    """The input graph is not 2-edge-connected, so no solution exists."""


class NoEligibleEdge(TwoECError):
    """The grow phase ran out of candidate edges before contracting to a
    single node.  Only reachable on infeasible input."""


class NotTwoEdgeConnected(TwoECError):
    """An edge set that was required to be 2-edge-connected is not."""


class NotInSolution(TwoECError):
    """An essentiality query named an edge outside the queried edge set."""


class CorruptTrace(TwoECError):
    """A grow trace is internally inconsistent or does not match the
    solution it is replayed against."""


class CertificateMismatch(TwoECError):
    """A kept solution edge has a non-tight dual constraint.  This signals
    an implementation bug, not bad input."""


class TooLargeForOracle(TwoECError):
    """The instance exceeds the exhaustive oracle's edge-count cap."""


class TooSparse(TwoECError):
    """A random-instance request asked for fewer edges than nodes."""


class ParseError(TwoECError):
    """An instance or certificate file is malformed.

    Carries the 1-based line number when it is known.
    """

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
