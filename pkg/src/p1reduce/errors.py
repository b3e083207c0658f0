"""Exception hierarchy shared by all modules."""


class P1ReduceError(Exception):
    """Base class for all errors raised by this package."""


class InvalidTypeError(P1ReduceError):
    """Invalid (label, rank) pair for a simple root system."""


class PrecisionError(P1ReduceError):
    """A computation needed more t-precision than was available."""


class NonIntegralError(P1ReduceError):
    """A scalar with negative pi-valuation appeared where integrality is required.

    ``t_exponent`` names the offending Laurent coefficient when known.
    """

    def __init__(self, message, t_exponent=None):
        super().__init__(message)
        self.t_exponent = t_exponent


class NotCoboundaryError(P1ReduceError):
    """The 1-cochain has a nonzero H^1 class and cannot be split."""


class BigCellError(P1ReduceError):
    """Block LDU decomposition failed: the matrix misses the big cell."""


class UnstableGenericError(P1ReduceError):
    """The generic fiber is not semistable; carries its splitting type."""

    def __init__(self, message, hn_type=None):
        super().__init__(message)
        self.hn_type = hn_type


class AlreadySemistableError(P1ReduceError):
    """Signal: the special fiber is semistable, there is nothing to modify."""


class UnboundedExponentError(P1ReduceError):
    """The unipotent part is trivial, so the central exponent is unbounded."""


class InternalBoundError(P1ReduceError):
    """An internal termination bound was exceeded; indicates a bug."""
