"""Exception hierarchy shared by every module of the package."""


class GisError(Exception):
    """Base class for domain errors (bad graphs, bad elements, unknown ids)."""


class GraphFormatError(GisError):
    """The graph document is malformed or violates a graph invariant."""


class UnknownIdError(GisError, KeyError):
    """A vertex, edge, block or label that does not exist was referenced."""

    def __str__(self):
        return Exception.__str__(self)


class CompositionError(GisError):
    """Two paths (or an edge sequence) do not compose."""


class MixedGraphError(GisError):
    """Elements over different graphs (or alphabets, index sets) were combined."""


class MembershipError(GisError):
    """An element lies outside the subsemigroup an operation is defined on."""


class BoundError(GisError):
    """An input needs data beyond the materialized enumeration bound."""


class ParseError(GisError, ValueError):
    """A literal could not be parsed; ``position`` is the offending offset."""

    def __init__(self, message, text="", position=0):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position
