"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class BootpercError(Exception):
    """Base class for every error raised by this package."""


class GraphParseError(BootpercError, ValueError):
    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ParameterError(BootpercError, ValueError):
    pass


class StructuralError(BootpercError, ValueError):
    """Inputs that do not fit together (wrong size ordering, foreign trace, ...)."""


class NotApplicableError(BootpercError):
    """The requested check needs r > d and the input does not satisfy it."""


class BudgetExceeded(BootpercError):
    """Exhaustive search refused because the free-vertex count is over budget.

    ``forced`` carries the partial result: the vertices that belong to every
    percolating set regardless.
    """

    def __init__(self, free: int, budget: int, forced: frozenset[int]) -> None:
        self.free = free
        self.budget = budget
        self.forced = forced
        super().__init__(
            f"{free} free vertices exceed the search budget of {budget} "
            f"({len(forced)} forced vertices)"
        )


class CertificationError(BootpercError, AssertionError):
    def __init__(self, clause: str, detail: str) -> None:
        self.clause = clause
        super().__init__(f"clause ({clause}) failed: {detail}")
