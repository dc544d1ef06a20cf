"""Exception hierarchy shared across the package."""


class CollapsumError(Exception):
    """Base class for all errors raised by this package."""


class GroupMismatchError(CollapsumError, ValueError):
    pass


class DimensionError(CollapsumError, ValueError):
    pass


class GroupOverflowError(CollapsumError, OverflowError):
    """A bounded integer computation left the representable range."""


class UnsupportedError(CollapsumError):
    """The operation is not defined for the given group (e.g. enumerating Z)."""


class BudgetExceededError(CollapsumError):
    """A brute-force enumeration would exceed its configured budget."""


class ParseError(CollapsumError, ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)
