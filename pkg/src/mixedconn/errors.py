"""Exception hierarchy.

Every error raised on purpose by this package derives from :class:`GraphError`.
The command line maps :class:`ParseError` to exit code 1,
:class:`InvariantBreach` to exit code 3 and every other :class:`GraphError`
to exit code 2 (precondition violation).
"""


class GraphError(ValueError):
    """Base class for all errors raised by mixedconn."""


class LoopEdge(GraphError):
    pass


class DuplicateVirtualLabel(GraphError):
    pass


class UnknownEndpoint(GraphError):
    pass


class UnknownEdge(GraphError):
    pass


class DuplicateEdgeId(GraphError):
    pass


class ParseError(GraphError):
    """Malformed edge-list text. ``lineno`` is 1-based, or 0 if unknown."""

    def __init__(self, message, lineno=0):
        super().__init__(f"line {lineno}: {message}" if lineno else message)
        self.lineno = lineno


class SizeExceeded(GraphError):
    pass


class Disconnected(GraphError):
    pass


class NotBiconnected(GraphError):
    pass


class NotASeparationPair(GraphError):
    pass


class InvalidClassSelection(GraphError):
    pass


class LabelNotShared(GraphError):
    pass


class EndpointMismatch(GraphError):
    pass


class NotSupporting(GraphError):
    pass


class NotASeparator(GraphError):
    pass


class PairingBroken(GraphError):
    pass


class NotTriconnectedComponents(GraphError):
    pass


class SequenceIncomplete(GraphError):
    pass


class NotCritical(GraphError):
    pass


class Not25Connected(GraphError):
    pass


class DegenerateSeparator(GraphError):
    pass


class Not3Connected(GraphError):
    pass


class NotDegenerate(GraphError):
    pass


class ThreeRegular(GraphError):
    pass


class PatternMismatch(GraphError):
    pass


class IsK4(GraphError):
    pass


class NotCubic3Connected(GraphError):
    pass


class NoValidEdge(GraphError):
    pass


class NotEulerian(GraphError):
    pass


class InvariantBreach(GraphError):
    """A structural lemma or theorem was violated at runtime.

    This signals a bug (or a counterexample), never bad user input.
    """
