"""Exception hierarchy shared by the library and the CLI"""

from typing import Optional


class CoverError(Exception):
    """Base error; `detail` is the message shown to the user."""

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class InputError(CoverError, ValueError):
    """Malformed input: bad file contents, out-of-range vertices, bad arguments."""

    def __init__(self, detail: str, line: Optional[int] = None):
        if line is not None:
            detail = f"line {line}: {detail}"
        super().__init__(detail)
        self.line = line


class PreconditionError(CoverError):
    """A mathematical precondition of the requested report does not hold."""


class SearchLimitError(CoverError):
    """An exhaustive scan refused to run past its configured cap."""


class SearchFailure(CoverError):
    """The subset finder failed although every guarantee flag passed."""
