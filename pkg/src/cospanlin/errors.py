"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class CospanLinError(ValueError):
    """Base class for every error raised by the library."""


class BoundaryError(CospanLinError):
    """Domain/codomain (or source/target) mismatch.

    ``path`` locates the offending subterm when the error comes from a term
    tree: a tuple of child indices from the root.
    """

    def __init__(self, message: str, path: tuple[int, ...] = ()):
        if path:
            message = f"{message} (at subterm {'.'.join(map(str, path))})"
        super().__init__(message)
        self.path = path


class ClassError(CospanLinError):
    """A map lies outside the class an operation needs (e.g. not surjective)."""


class ParseError(CospanLinError):
    def __init__(self, message: str, position: int, text: str = ""):
        super().__init__(f"{message} at position {position}")
        self.position = position
        self.text = text


class LawFailure(CospanLinError):
    """Raised when a construction needs laws that do not hold."""

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report
