"""Exception types shared across the package."""


class DegreeError(ValueError):
    """Permutations of different degrees were combined."""


class LetterError(ValueError):
    """A tree letter lies outside 1..arity."""


class SearchBudgetExceeded(RuntimeError):
    """A bounded search ran out of budget before reaching a verdict.

    This is never a wrong answer: the caller may retry with a larger bound.
    """

    def __init__(self, message: str, budget: int):
        super().__init__(message)
        self.budget = budget


class AreaBudgetExceeded(RuntimeError):
    """The area search exhausted its budget without finding a filling."""

    def __init__(self, message: str, budget: int):
        super().__init__(message)
        self.budget = budget


class NeedDeeperPrefix(ValueError):
    """A vertex was too shallow to be routed through a prefix table."""


class FormatError(ValueError):
    """A machine or table file failed to parse."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line
