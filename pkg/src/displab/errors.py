"""Exception types shared across the package."""


class DisplabError(Exception):
    """Base class for all displab errors."""


class ParseError(DisplabError):
    """Malformed digraph file, family string or CLI input."""


class SizeLimitError(DisplabError):
    """Input exceeds a hard size cap of the requested algorithm."""


class CapExceededError(DisplabError):
    """An enumeration would produce more objects than the configured cap."""


class DeconvolutionTailError(DisplabError):
    """The series deconvolution did not terminate where theory says it must.

    Raised when the coefficients beyond the guaranteed degree bound fail to
    vanish; this always indicates a counting bug upstream, never bad input.
    """
