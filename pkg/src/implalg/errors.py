"""Exception hierarchy shared by every module in the package."""


class ImplAlgError(ValueError):
    """Base class for all errors raised by :mod:`implalg`."""


# hypergraph construction
class IsolatedVertex(ImplAlgError):
    def __init__(self, vertex):
        super().__init__(f"vertex {vertex!r} is in no edge")
        self.vertex = vertex


class DuplicateEdge(ImplAlgError):
    pass


class EmptyEdge(ImplAlgError):
    pass


class UnknownLabel(ImplAlgError):
    def __init__(self, label):
        super().__init__(f"unknown vertex label {label!r}")
        self.label = label


class EmptyIndexSet(ImplAlgError):
    pass


class BoundsTooLarge(ImplAlgError):
    pass


class GroundTooLarge(ImplAlgError):
    pass


# algebra
class EmptyAlgebra(ImplAlgError):
    pass


class NotAnElement(ImplAlgError):
    def __init__(self, x):
        super().__init__(f"{x:#b} is not an element of the algebra")
        self.x = x


# profiles and polymatroids
class TooManyMinimalElements(ImplAlgError):
    pass


class TooManyEdges(ImplAlgError):
    pass


class BadIndexSet(ImplAlgError):
    pass


class NegativeValue(ImplAlgError):
    def __init__(self, subset, value):
        super().__init__(f"negative value {value} at subset {subset:#b}")
        self.subset = subset
        self.value = value


class NegativeResult(NegativeValue):
    pass


# isomorphism
class TooLarge(ImplAlgError):
    pass


# synthesis
class ConditionsFail(ImplAlgError):
    def __init__(self, verdict):
        super().__init__(f"profile fails realizability conditions: {verdict}")
        self.verdict = verdict


class RealizationError(ImplAlgError):
    """The recursive construction broke on a profile that passed the conditions."""


class InsideOverflow(RealizationError):
    def __init__(self, index, needed, available):
        super().__init__(
            f"inside family for index {index} needs {needed} vertices, "
            f"edge has {available}"
        )
        self.index = index
        self.needed = needed
        self.available = available


class VerificationFail(RealizationError):
    def __init__(self, subset, expected, got):
        super().__init__(
            f"realized intersection at {subset:#b} is {got}, profile says {expected}"
        )
        self.subset = subset
        self.expected = expected
        self.got = got


class InternalInconsistency(ImplAlgError):
    pass
