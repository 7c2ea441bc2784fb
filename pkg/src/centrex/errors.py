"""Exception types shared across the workbench.

Two error families matter for callers: InputError means the caller handed us
something malformed or out of contract (bad file, wrong field, violated
precondition), while CheckFailed means an internal mathematical identity that
the code asserts did not hold.  The CLI maps them to exit codes 2 and 1.
"""


class WorkbenchError(Exception):
    pass


class InputError(WorkbenchError):
    """Malformed input or violated precondition."""


class CheckFailed(WorkbenchError):
    """An asserted mathematical identity failed to hold."""


class LawSyntaxError(InputError):
    """Law source text that does not match the grammar."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class NonMultilinearError(InputError):
    """A law term in which some variable is repeated or missing."""
