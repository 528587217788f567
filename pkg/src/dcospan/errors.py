"""Exception types shared across the package.

Every validation failure carries enough data to point at a concrete
offending element, so callers can surface witnesses instead of bare
booleans.
"""

from __future__ import annotations


class DiagramError(Exception):
    """Base class for all errors raised by this package."""


class MismatchError(DiagramError):
    """Two objects that were required to agree on the nose do not.

    Raised for non-composable boundaries, domain/codomain clashes and
    comparisons between squares with different frames.
    """


class CoconeError(DiagramError):
    """A claimed cocone fails to commute.

    `witness` is an element of the span apex on which the two legs
    disagree.
    """

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class ValidationError(DiagramError):
    """A structure fails one of its well-formedness equations.

    `location` names the face or field that failed, `witness` is the
    element (or pair) exhibiting the failure.
    """

    def __init__(self, message: str, location: str | None = None, witness=None):
        super().__init__(message)
        self.location = location
        self.witness = witness


class ParseError(DiagramError):
    """A document does not deserialize into a valid structure."""
