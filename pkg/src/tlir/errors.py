"""Exception hierarchy shared by every module."""


class TLIRError(Exception):
    """Base class for all errors raised by this package."""


class InputError(TLIRError, ValueError):
    """Malformed input: unknown vertex ids, self-loops, bad parameters."""


class ParseError(InputError):
    """A graph or coloring file could not be parsed."""


class PreconditionError(TLIRError, ValueError):
    """An operation was called on data violating its stated precondition."""


class ClassPreconditionError(PreconditionError):
    """The input graph is not in the class an algorithm requires."""


class BudgetExhausted(TLIRError):
    """A search ran out of its node or time budget before deciding."""


class InvariantError(TLIRError, AssertionError):
    """An internal invariant failed; this always indicates a bug."""


class NoColoringError(PreconditionError):
    """No proper vertex coloring exists with the requested number of colors."""
