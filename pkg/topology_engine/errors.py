"""Error hierarchy for the topology engine."""


class TopologyEngineError(ValueError):
    """Base class for every error raised by the engine."""


class NonInvolutiveGluing(TopologyEngineError):
    pass


class FaceGluedToItselfIdentically(TopologyEngineError):
    pass


class IndexOutOfRange(TopologyEngineError):
    pass


class InvalidEdgeIdentification(TopologyEngineError):
    """An edge is identified with itself in reverse."""


class NotOrientable(TopologyEngineError):
    pass


class Inapplicable(TopologyEngineError):
    """A move was requested where the local configuration does not allow it."""


class MalformedSignature(TopologyEngineError):
    pass


class EdgeNotOnBoundary(TopologyEngineError):
    pass


class InvalidParameter(TopologyEngineError):
    pass


class NotCoprime(TopologyEngineError):
    pass


class NoSimplicialMatching(TopologyEngineError):
    pass


class NotAdmissible(TopologyEngineError):
    pass


class InconsistentWeights(TopologyEngineError):
    """Edge weights differ between incidences of one edge class."""


class IncompatibleQuadTypes(TopologyEngineError):
    pass


class NoRepresentative(TopologyEngineError):
    pass


class LimitExceeded(TopologyEngineError):
    pass


class BudgetExhausted(TopologyEngineError):
    pass


class InvalidSlope(TopologyEngineError):
    pass


class WrongVertexStructure(TopologyEngineError):
    pass


class RankTooSmall(TopologyEngineError):
    pass


class FileUnreadable(TopologyEngineError):
    pass
