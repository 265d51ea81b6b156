"""Exception types shared across the package."""

from __future__ import annotations


class AGError(ValueError):
    """Base class for invalid input to the workbench."""


class MagmaError(AGError):
    pass


class IFSError(AGError):
    pass


class ConstraintError(IFSError):
    """A strict-mode set has mu(x) + gamma(x) > 1 at some element."""

    def __init__(self, element: int, total):
        self.element = element
        self.total = total
        super().__init__(f"mu + gamma = {total} > 1 at element {element}")


class BudgetExceeded(AGError):
    pass


class ArityError(AGError):
    pass


class ParseError(AGError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
