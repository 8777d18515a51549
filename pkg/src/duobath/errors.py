"""Exception types shared across the package."""


class InvalidParamsError(ValueError):
    """A model parameter is outside its admissible range."""


class StabilityBoundError(InvalidParamsError):
    """A requested time grid exceeds the recommended stable range."""


class OverflowDomainError(ArithmeticError):
    """A closed-form evaluation left the representable floating-point range."""


class NumericalDomainError(ArithmeticError):
    """A radicand or discriminant went negative beyond tolerance,
    signalling an unphysical input or a transcription fault."""


class QuadratureError(RuntimeError):
    """Adaptive quadrature failed to reach the requested accuracy."""


class DivergenceError(RuntimeError):
    """A moment trajectory left the configured stability bound."""


class EventSearchError(RuntimeError):
    """An event search (death time, dark period) found no event."""
