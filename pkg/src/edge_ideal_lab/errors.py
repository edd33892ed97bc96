"""Shared exception types."""


class FormatError(ValueError):
    """Malformed input document (bad edge list, facet list, or header)."""


class DomainError(ValueError):
    """A precondition of an operation was violated."""


class ResourceError(RuntimeError):
    """Input exceeds a configured size guard."""
