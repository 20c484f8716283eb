"""Exception types shared by every module in the package."""


class DomainError(ValueError):
    """A query violates a documented hypothesis (bad input, off-shell data)."""


class IntegralityError(ArithmeticError):
    """An exact rational that is guaranteed to be an integer failed to be one.

    Raised only on internal bugs (a mistranscribed formula, a broken
    recursion); never on bad user input.
    """


class CrossCheckError(RuntimeError):
    """Two independent evaluations of the same quantity disagreed."""
