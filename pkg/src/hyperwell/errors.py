"""Exception types shared across the package."""


class HyperwellError(Exception):
    """Base class for all package-specific errors."""


class DomainError(HyperwellError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ConvergenceError(HyperwellError, RuntimeError):
    """An iterative procedure exhausted its budget without converging."""


class BracketError(HyperwellError, RuntimeError):
    """An energy bracket does not contain the requested eigenvalue."""


class TailTooLargeError(HyperwellError, RuntimeError):
    """The integration window truncates a tail that is not yet negligible."""


class InsufficientSamplingError(HyperwellError, RuntimeError):
    """Samples are too sparse to resolve the oscillation being counted."""


class UnboundStateError(HyperwellError, ValueError):
    """A wavefunction was requested for a level that is not bound."""


class StateLabelError(HyperwellError, ValueError):
    """A spectroscopic state label could not be parsed."""
