"""Exception hierarchy shared by every module."""


class CritModError(Exception):
    pass


class GraphError(CritModError, ValueError):
    pass


class DisconnectedGraph(GraphError):
    pass


class NoSuchEdge(GraphError):
    pass


class SameVertex(GraphError):
    pass


class InvalidPartition(GraphError):
    pass


class BridgeEdge(GraphError):
    pass


class TooFewVertices(GraphError):
    pass


class SinkMismatch(GraphError):
    pass


class OrientationError(CritModError, ValueError):
    pass


class NotAcyclic(OrientationError):
    pass


class NotSourceOrSink(OrientationError):
    pass


class NotEquivalent(OrientationError):
    pass


class ShapeMismatch(OrientationError):
    pass


class NotStabilized(CritModError, ValueError):
    pass


class GraphFormatError(CritModError, ValueError):
    pass
