class BergeError(ValueError):
    """Base class for every error raised by the toolkit."""


class NonUniformEdge(BergeError):
    pass


class DuplicateEdge(BergeError):
    pass


class VertexOutOfRange(BergeError):
    pass


class BadUniformity(BergeError):
    pass


class SameVertex(BergeError):
    pass


class LengthOutOfRange(BergeError):
    pass


class OutOfRange(BergeError):
    pass


class HypergraphParseError(BergeError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class BadParameters(BergeError):
    pass


class NotAChord(BergeError):
    pass


class PreconditionViolated(BergeError):
    pass


class NotSsc(BergeError):
    pass


class MatchingFailed(BergeError):
    pass


class HypothesesNotMet(BergeError):
    """The frame is below the degree bar of the theorem that applies to (n, r)."""

    def __init__(self, clause: str, vertex: int | None = None, count: int | None = None, required: int | None = None):
        self.clause = clause
        self.vertex = vertex
        self.count = count
        self.required = required
        if vertex is None:
            super().__init__(clause)
        else:
            super().__init__(f"{clause}: vertex {vertex} lies in {count} extra edges, needs {required}")


class ExtractionFailed(BergeError):
    pass


class SearchBudgetExceeded(BergeError):
    def __init__(self, nodes: int):
        self.nodes = nodes
        super().__init__(f"search cap exceeded after {nodes} node expansions")


class InvariantViolated(BergeError):
    """A structural fact that is proved to hold did not hold."""
