"""Exception hierarchy shared by every oddprime module."""


class OddPrimeError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParameters(OddPrimeError, ValueError):
    pass


class PartialLabeling(OddPrimeError, ValueError):
    def __init__(self, missing):
        self.missing = tuple(sorted(missing))
        super().__init__(f"unlabeled vertices: {list(self.missing)}")


class UnsupportedPolygon(OddPrimeError, ValueError):
    def __init__(self, k):
        self.k = k
        super().__init__(
            f"no constructive labeling for {k}-gon layers; supported sides are 3, 5, 6 and powers of two >= 4"
        )


class DegreeTooLarge(OddPrimeError, ValueError):
    def __init__(self, vertex, degree):
        self.vertex = vertex
        self.degree = degree
        super().__init__(f"vertex {vertex} has degree {degree} > 5")


class ProvablyInfeasible(OddPrimeError):
    """The graph has no odd prime labeling.

    ``beta`` is the independence number and ``bound`` the number of multiples
    of 3 among the labels; ``beta < bound`` is the certificate.
    """

    def __init__(self, reason, beta=None, bound=None):
        self.reason = reason
        self.beta = beta
        self.bound = bound
        super().__init__(reason)


class MatchingFailure(OddPrimeError, RuntimeError):
    pass


class HypothesisViolated(OddPrimeError, ValueError):
    pass


class TargetNotInSequence(OddPrimeError, ValueError):
    pass


class OrderLimitExceeded(OddPrimeError, ValueError):
    def __init__(self, order, limit):
        self.order = order
        self.limit = limit
        super().__init__(f"graph order {order} exceeds limit {limit}")


class OrderOutOfRange(OddPrimeError, ValueError):
    pass


class NotAPrimeLabeling(OddPrimeError, ValueError):
    def __init__(self, message, violating_edges=()):
        self.violating_edges = list(violating_edges)
        super().__init__(message)
