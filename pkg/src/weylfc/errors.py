"""Exception hierarchy shared by all weylfc modules."""


class WeylFCError(Exception):
    """Base class for every error raised by weylfc."""


class ParameterLeadingCoefficient(WeylFCError, ValueError):
    """A divisor's leading coefficient involves a parameter symbol.

    Division would require inverting a polynomial in a, b, c_i.  Specialize
    the parameters to rationals first.
    """


class UnspecializedParameter(WeylFCError, ValueError):
    """A numeric evaluation met a coefficient that still contains parameters."""


class ContextMismatch(WeylFCError, ValueError):
    pass


class ZeroElement(WeylFCError, ValueError):
    pass


class NegativeWeightSum(WeylFCError, ValueError):
    pass


class NonHomogeneousInput(WeylFCError, ValueError):
    pass


class InvalidOrder(WeylFCError, ValueError):
    """The requested order cannot be used for the requested computation."""


class NonSquarefree(WeylFCError, ValueError):
    pass


class IndexOutOfRange(WeylFCError, IndexError):
    pass


class SingularChange(WeylFCError, ValueError):
    """A monomial change of coordinates is not invertible over Q."""


class OperatorSyntaxError(WeylFCError):
    """Malformed operator expression; ``position`` is a 0-based offset."""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} at offset {position}")


class UnknownSymbol(OperatorSyntaxError):
    pass
