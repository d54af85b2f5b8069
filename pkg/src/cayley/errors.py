"""Exception types shared across the package."""


class CayleyError(Exception):
    """Base class for all library errors."""


class FormatError(CayleyError):
    """Malformed input text (graph or table file)."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ReservedPrefixError(FormatError):
    """User input used a token prefix reserved for internal constructions."""


class EmptyGraphError(CayleyError):
    """A graph (or a restriction of one) ended up with no edges."""


class UnknownVertexError(CayleyError):
    pass


class UnknownLabelError(CayleyError):
    pass


class UnknownElementError(CayleyError):
    pass


class LabelingError(CayleyError):
    """A labeling or injection is not injective or has the wrong domain."""


class ModePreconditionError(CayleyError):
    """A closure mode was requested that the table does not support."""


class PreconditionFailed(CayleyError):
    """An operation's stated precondition does not hold for the input."""


class NotDeterministicError(PreconditionFailed):
    def __init__(self, message="not deterministic"):
        super().__init__(message)


class NotCoDeterministicError(PreconditionFailed):
    def __init__(self, message="not co-deterministic"):
        super().__init__(message)


class InconsistentProductError(CayleyError):
    """Two labels for the same operand forced different products."""


class RunFailedError(CayleyError):
    """A witness word could not be run to completion."""


class SearchCapExceeded(CayleyError):
    """The injection search hit its candidate cap before finding an answer."""


class InternalContradiction(CayleyError):
    """A postcondition the theory guarantees failed to hold; indicates a bug."""
