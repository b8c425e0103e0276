"""Exceptions raised by openspectral.

Argument errors are plain :obj:`ValueError`; the classes below only name the
failures callers may want to tell apart.
"""


class DimensionMismatchError(ValueError):
    """A vector or point set does not live in the domain's dimension."""


class HorizonError(ValueError):
    """A ball zero set was queried beyond the radius it was enumerated to."""


class ConvergenceError(RuntimeError):
    """Root refinement did not converge within its iteration budget."""


class BudgetExceededError(RuntimeError):
    """An enumeration would exceed its configured node or subset budget."""
