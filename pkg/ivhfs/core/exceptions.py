"""Error hierarchy shared by the library and the command line."""
from typing import Any, Dict, Optional


class IvhfsError(Exception):
    """Base class for every error raised by ivhfs."""

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    @property
    def kind(self) -> str:
        return type(self).__name__


# Intervals

class IntervalError(IvhfsError, ValueError):
    """An interval could not be built."""


class OutOfRange(IntervalError):
    """An endpoint lies outside [0, 1]."""


class Inverted(IntervalError):
    """Lower endpoint exceeds upper endpoint."""


# Hesitant elements

class HfeError(IvhfsError, ValueError):
    """A hesitant element could not be built or extended."""


class EmptyHfe(HfeError):
    """A hesitant element needs at least one interval."""


class TooShort(HfeError):
    """Extension target is shorter than the element."""


# Soft sets

class SoftSetError(IvhfsError):
    """Soft-set construction or combination failed."""


class EmptyIntersection(SoftSetError):
    """Intersection of soft sets with disjoint supports."""


class ContextMismatch(SoftSetError):
    """Operands are defined over different contexts."""


class SupportError(SoftSetError, ValueError):
    """Support or cells do not fit the context."""


# Workspace documents

class WorkspaceError(IvhfsError):
    """A workspace document could not be used."""


class ParseError(WorkspaceError):
    """The document is not well-formed."""


class SchemaError(WorkspaceError):
    """The document is well-formed but violates the workspace schema."""


class UnknownName(WorkspaceError):
    """A set or topology name does not resolve."""


# Families of soft sets

class TopologyError(IvhfsError):
    """A family of soft sets could not be built."""


class DuplicateMember(TopologyError, ValueError):
    """Two family members share a name."""


class NotAPoint(TopologyError, ValueError):
    """A soft set is not a soft point."""
