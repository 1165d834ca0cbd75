# -*- coding: utf-8 -*-
"""Exception types raised by genrank. Experiment mismatches are never raised,
they are recorded in reports."""


class GenrankError(RuntimeError):
    """Base class for all library errors."""


class ShapeError(GenrankError, ValueError):
    """Operand shapes are inconsistent."""


class DomainError(GenrankError, ValueError):
    """Input values are outside of the supported domain (i.e. NaN/inf)."""


class BudgetExceededError(GenrankError):
    """An exhaustive enumeration would exceed the configured subset budget."""

    def __init__(self, what, count, budget):
        self.what = what
        self.count = count
        self.budget = budget
        super().__init__(
            '{} requires {} subsets, budget is {}'.format(what, count, budget))


class ConstraintError(GenrankError, ValueError):
    """Parameters are individually valid but jointly infeasible."""


class InsufficientSupportError(GenrankError):
    """A coefficient stream ran out before reaching the requested rank."""


class PreconditionError(GenrankError, ValueError):
    """A construction precondition (even width, divisibility, ...) is violated."""


class CapacityRefusedError(GenrankError):
    """The capacity verdict does not predict surjectivity."""

    def __init__(self, verdict):
        self.verdict = verdict
        super().__init__('Capacity refused: {}'.format(verdict.reason))


class ConvergenceError(GenrankError):
    """The interpolation solver exhausted its restarts."""

    def __init__(self, msg, trace=None):
        self.trace = trace if trace is not None else []
        super().__init__(msg)


class ConfigError(GenrankError, ValueError):
    """Invalid or unknown configuration option."""
