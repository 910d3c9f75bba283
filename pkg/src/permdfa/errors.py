"""Shared exception types."""


class NotAPermutationError(ValueError):
    """An image sequence or letter action is not a bijection on its state set."""


class DegreeMismatchError(ValueError):
    """Operands act on point sets of different sizes."""


class CycleFormatError(ValueError):
    """Cycle-notation text is malformed, out of range, or repeats an index."""


class AutomatonFormatError(ValueError):
    """Automaton text is malformed; knows the offending line when there is one."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


class CapExceededError(RuntimeError):
    """A closure grew past its configured element cap."""


class TwoPathDisagreement(RuntimeError):
    """The structural prediction and the minimization oracle disagreed.

    This should be impossible; it means a bug in one of the two routes. The
    offending instance is kept in serialized form for replay.
    """

    def __init__(self, row: str):
        self.row = row
        super().__init__(f"prediction and oracle disagree on instance: {row}")
