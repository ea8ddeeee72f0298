"""Exception types shared across the package."""


class DistpolyError(Exception):
    """Base class for all errors raised by distpoly."""


class VertexOutOfRangeError(DistpolyError):
    """A vertex id falls outside 0..vertex_count-1."""

    def __init__(self, vertex: int, vertex_count: int):
        super().__init__(f"vertex {vertex} out of range for {vertex_count} vertices")
        self.vertex = vertex
        self.vertex_count = vertex_count


class SelfLoopError(DistpolyError):
    """An edge joins a vertex to itself."""

    def __init__(self, vertex: int):
        super().__init__(f"self-loop at vertex {vertex}")
        self.vertex = vertex


class DuplicateEdgeError(DistpolyError):
    """The same unordered edge appears more than once."""

    def __init__(self, u: int, v: int):
        super().__init__(f"duplicate edge ({u}, {v})")
        self.edge = (u, v)


class DisconnectedError(DistpolyError):
    """A vertex is unreachable in a computation that requires connectivity."""

    def __init__(self, unreached_vertex: int):
        super().__init__(f"graph is disconnected: vertex {unreached_vertex} unreachable")
        self.unreached_vertex = unreached_vertex


class MalformedOrbitsError(DistpolyError):
    """An orbit specification is not a consistent partition of the vertex set."""


class InvalidParameterError(DistpolyError):
    """A parameter violates a documented precondition."""


class EdgeListFormatError(DistpolyError):
    """An edge-list file or text does not follow the expected format."""


class InsufficientSamplesError(DistpolyError):
    """Too few distinct sample parameters for the requested fit degree."""


class DuplicateSampleParameterError(DistpolyError):
    """The same family parameter appears more than once in the fit samples."""

    def __init__(self, m: int):
        super().__init__(f"duplicate sample parameter m={m}")
        self.m = m


class InconsistentSamplesError(DistpolyError):
    """Sample counts cannot be reproduced by any polynomial of the requested degree."""


class UsageError(DistpolyError):
    """Invalid command line invocation."""
