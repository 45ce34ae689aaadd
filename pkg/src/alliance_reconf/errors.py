"""Exception hierarchy shared by every module.

Each class maps onto one CLI exit code, so callers can tell a genuine
"no" apart from bad input, an exhausted budget, or a broken invariant.
"""

from __future__ import annotations


class ReconfError(Exception):
    """Base class for all toolkit errors."""

    exit_code = 4


class MalformedInput(ReconfError, ValueError):
    """Input violates a documented format or precondition."""

    exit_code = 2


class Misuse(ReconfError, ValueError):
    """A solver or transform was called outside its supported domain."""

    exit_code = 2


class ResourceLimit(ReconfError):
    """A search or enumeration budget was exhausted before an answer."""

    exit_code = 3


class InternalAssertion(ReconfError, AssertionError):
    """A proven bound or invariant failed at runtime."""

    exit_code = 4
