"""Exception hierarchy shared by every module."""


class AlgebraError(ValueError):
    """Base class for all errors raised by finequant."""


class DimensionError(AlgebraError):
    """Operands live over different odd dimensions ``n``."""


class ParityError(AlgebraError):
    """An operation needed a parity-homogeneous input."""


class GeneratorIndexError(AlgebraError):
    """An odd generator index is outside ``1..n``."""


class SuperdimensionError(AlgebraError):
    """The superdimension makes a construction degenerate (``m + 1 == 0``)."""


class WeightMismatchError(AlgebraError):
    """Density weights (or flavors) do not chain."""


class FlavorError(AlgebraError):
    """A symbol was given in the wrong moment coordinates."""


class OrderError(AlgebraError):
    """Order / Heisenberg-order precondition violated."""


class CriticalValueError(AlgebraError):
    """A denominator vanished at a critical weight.

    ``witness`` names the set and the parameters that produced the zero,
    e.g. ``("I_delta", {"c": 0, "j": 0})``.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ParseError(AlgebraError):
    """Malformed expression; ``offset`` is the byte offset of the problem."""

    def __init__(self, message, offset=0):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset
