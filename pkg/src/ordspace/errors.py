"""Exception types shared across the library."""


class OrdspaceError(Exception):
    """Base class for all library-specific errors."""


class ArityError(OrdspaceError, ValueError):
    """The group arity is out of range (at least 2 is required)."""


class IndexRangeError(OrdspaceError, ValueError):
    """A generator index, coordinate, or stratum parameter is out of range."""


class ArityMismatchError(OrdspaceError, ValueError):
    """Operands belong to groups of different arity."""


class InvalidDescriptorError(OrdspaceError, ValueError):
    """An order descriptor violates its structural invariants."""


class NotFullyMixedError(OrdspaceError, ValueError):
    """Isolation certificates require a descriptor with a single block."""


class SingleBlockError(OrdspaceError, ValueError):
    """Limit witnesses require a descriptor with at least two blocks."""


class WitnessExhaustionError(OrdspaceError, RuntimeError):
    """The witness search hit its offset budget without finding enough
    agreeing descriptors; this signals a bug in the caller or the search."""


class PrecisionExceededError(OrdspaceError, RuntimeError):
    """Interval refinement reached the precision ceiling without deciding a
    sign.  With a prime base this cannot happen, so it usually means a
    precondition (primality, exponent range) was violated."""


class ExprSyntaxError(OrdspaceError, ValueError):
    """Malformed element expression; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position
