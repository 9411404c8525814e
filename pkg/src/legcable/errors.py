"""Exception types shared across the package.

Every user-facing failure derives from ``ValidationError`` and carries a
``details`` mapping that the command line front end serializes verbatim.
"""

from __future__ import annotations


class ValidationError(ValueError):
    """Input rejected; ``details`` is a JSON-serializable diagnostic."""

    def __init__(self, message: str, **details):
        super().__init__(message)
        self.details = {"error": type(self).__name__, "message": message, **details}


class SlopeError(ValidationError):
    pass


class PathError(ValidationError):
    pass


class AtlasError(ValidationError):
    pass


class ToriAtlasError(ValidationError):
    pass


class InternalInvariantError(RuntimeError):
    """Raised when a computed object violates an invariant it should satisfy by construction."""
