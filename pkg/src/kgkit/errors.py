"""Exception types shared across the package."""


class KGError(Exception):
    """Base class for all kgkit errors."""


class ValidationError(KGError):
    """A term, triple or input value violates a structural constraint."""


class UnknownPrefixError(KGError):
    """A qname uses a prefix that was never registered."""

    def __init__(self, prefix: str):
        super().__init__(f"unknown prefix: {prefix!r}")
        self.prefix = prefix


class ParseError(KGError):
    """Syntax error while reading a serialized graph, query or spec file."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        loc = ""
        if line is not None:
            loc = f" at line {line}" + (f", column {column}" if column is not None else "")
        super().__init__(message + loc)
        self.line = line
        self.column = column


class ReifyError(KGError):
    """A table row does not satisfy its reification spec."""


class QueryValidationError(KGError):
    """The query is malformed or incompatible with the chosen world assumption."""


class InconsistentKBError(KGError):
    """An operation that requires a consistent KB was given an inconsistent one.

    Carries the inconsistency report so callers can show the violations.
    """

    def __init__(self, report):
        super().__init__(f"knowledge base is inconsistent ({len(report.violations)} violation(s))")
        self.report = report


class UnknownTermError(KGError):
    """An entity or relation is not part of the embedding model's vocabulary."""


class SamplingError(KGError):
    """Negative sampling cannot produce a valid corruption."""
