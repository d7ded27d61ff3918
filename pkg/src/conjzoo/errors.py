"""Exception hierarchy shared by the library and the command line."""

from __future__ import annotations


class ConjzooError(Exception):
    """Base class for every error raised on purpose by this package."""


class UsageError(ConjzooError, ValueError):
    """Operands that do not fit together (e.g. different algebra levels)."""


class DomainError(ConjzooError, ValueError):
    """An operation evaluated outside its domain (zero inverse, non-projector, ...)."""


class ParseError(ConjzooError, ValueError):
    def __init__(self, message: str, line: int = 1, column: int = 1, source: str = "<input>"):
        self.message = message
        self.line = line
        self.column = column
        self.source = source
        super().__init__(f"{source}:{line}:{column}: {message}")


class InvalidAlgebra(ConjzooError, ValueError):
    """An algebra failed validation; ``report`` holds the violations."""

    def __init__(self, report):
        self.report = report
        first = report.violations[0] if report.violations else None
        detail = f": {first.axiom}: {first.message}" if first else ""
        super().__init__(f"algebra {report.name!r} is not a valid unstable algebra{detail}")


class NotADoubleCandidate(ConjzooError, ValueError):
    pass


class NotPoincareDuality(ConjzooError, ValueError):
    pass


class NotAllRelatorsSquare(ConjzooError, ValueError):
    def __init__(self, relator: str):
        self.relator = relator
        super().__init__(f"relator {relator!r} is not literally a square w w")
