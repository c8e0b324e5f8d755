"""Exception types shared across the package."""

from __future__ import annotations


class PowergapError(Exception):
    """Base class for all library errors."""


class DivisionByZeroInterval(PowergapError):
    """Divisor interval contains zero."""


class DomainError(PowergapError):
    """Function evaluated outside its certified domain (e.g. log of a
    nonpositive interval)."""


class PrecisionExhausted(PowergapError):
    """A certified decision could not be reached within the precision cap.

    Carries the last enclosure computed so callers can decide whether to
    fall back to an exact path or report Undecided.
    """

    def __init__(self, message, last=None):
        super().__init__(message)
        self.last = last


class ExprSyntaxError(PowergapError):
    """Malformed expression text; `pos` is the 0-based offset of the error."""

    def __init__(self, message, pos):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class IsolationError(PowergapError):
    """A selector box could not be certified to contain exactly one root."""


class IsolationOnlyInput(PowergapError):
    """Operation requires a true minimal polynomial but the input is
    flagged isolation-only."""


class RootIsolationFailure(PowergapError):
    """Failed to certify the complete set of conjugates of a polynomial."""


class FactorizationTooLarge(PowergapError):
    """Integer factorization exceeded the configured budget."""


class InvalidParams(PowergapError):
    """Parameters violate a documented precondition."""


class OrderTooLarge(PowergapError):
    """Liouville construction order k beyond the supported desk-scale cap."""


class ThresholdEmpty(PowergapError):
    """The lower-bound box is empty (x too small)."""


class WindowError(PowergapError):
    """A certified count over the requested window is not achievable."""
