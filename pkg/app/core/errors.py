"""Domain exceptions"""

from typing import Optional, Tuple, Any


class LRError(Exception):
    """Base class for every error raised by lrpictures."""
    pass


class ShapeError(LRError, ValueError):
    """Malformed partition, composition, skew shape, cell or shape text."""
    pass


class OrderError(LRError, ValueError):
    """A cell order is not a permutation of its domain, or is not admissible."""

    def __init__(self, message: str, pair: Optional[Tuple[Any, Any]] = None):
        super().__init__(message)
        self.pair = pair


class TableauError(LRError, ValueError):
    """Semistandard invariants violated, or a cell outside the tableau shape."""
    pass


class PictureError(LRError, ValueError):
    """A map is not a bijection onto its skew codomain."""
    pass


class ContractViolation(LRError, AssertionError):
    """Phi or Psi produced a value outside its target set."""
    pass


class BudgetExceeded(LRError):
    """An enumeration or sweep would exceed a configured cap."""
    pass


def domain_error(error: Exception, fallback: type = LRError) -> LRError:
    """The domain error a pydantic validator raised, or `fallback` wrapping the message."""
    errors = getattr(error, "errors", None)
    if callable(errors):
        for detail in errors():
            cause = (detail.get("ctx") or {}).get("error")
            if isinstance(cause, LRError):
                return cause
    return fallback(str(error))
