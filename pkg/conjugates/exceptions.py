"""Errors raised by the conjugates services."""


class LegendreError(ValueError):
    """Base class for every input or numerical error in the app."""


class InvalidInterval(LegendreError):
    """Interval endpoints are not finite or not strictly ordered."""


class NonFiniteValue(LegendreError):
    """A function returned NaN or an infinity."""

    def __init__(self, x: float, value: float, what: str = "F"):
        self.x = x
        self.value = value
        super().__init__(f"{what}({x!r}) = {value!r} is not finite")


class NonMonotoneDerivative(LegendreError):
    """The derivative is not strictly increasing on the validation grid."""

    def __init__(self, x_left: float, x_right: float, f_left: float, f_right: float):
        self.x_left = x_left
        self.x_right = x_right
        self.f_left = f_left
        self.f_right = f_right
        super().__init__(
            f"f({x_left!r}) = {f_left!r} >= f({x_right!r}) = {f_right!r}; "
            f"the derivative must be strictly increasing"
        )


class DerivativeMismatch(LegendreError):
    """A supplied derivative disagrees with finite differences of F."""

    def __init__(self, x: float, supplied: float, differenced: float):
        self.x = x
        self.supplied = supplied
        self.differenced = differenced
        super().__init__(
            f"supplied f({x!r}) = {supplied!r} but finite differences of F "
            f"give {differenced!r}"
        )


class OutOfDomain(LegendreError):
    """A point lies outside the model's domain."""


class ConjugateOutOfRange(LegendreError):
    """A conjugate query lies outside [f(lo), f(hi)]."""


class MaxDepthExceeded(LegendreError):
    """Adaptive quadrature did not converge within the recursion limit."""


class NoAxisIntersection(LegendreError):
    """The graph of f meets neither axis at a non-negative coordinate."""


class MixedSigns(LegendreError):
    """Area points do not share a single same-sign quadrant."""


class BoxViolation(LegendreError):
    """A point violates the strict inequalities of a mixed-sign box."""


class EmptyPointSet(LegendreError):
    """An area report was requested for no points."""


class InvalidSamples(LegendreError):
    """A sampled function is too short or not strictly increasing in x."""


class UnknownFunction(LegendreError):
    """A function spec names nothing in the catalog."""


class InvalidFunctionSpec(LegendreError):
    """A function spec or its domain cannot be parsed."""


def describe(exc: LegendreError) -> str:
    """Render an error as ``ClassName: message`` for the command line."""
    return f"{type(exc).__name__}: {exc}"
