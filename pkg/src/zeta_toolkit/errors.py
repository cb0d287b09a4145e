"""Exception hierarchy.

Every failure mode raises a subclass of :class:`ZetaToolkitError`; the CLI
maps these to exit code 1 and genuine I/O problems to exit code 2.
"""


class ZetaToolkitError(Exception):
    """Base class for all library errors."""


class DomainError(ZetaToolkitError):
    """Input outside the mathematical domain (pole, nonpositive parameter)."""


class RangeError(ZetaToolkitError):
    """Admissibility-range violation; the message names the failed inequality."""


class NearZeroError(ZetaToolkitError):
    """zeta(s) is numerically indistinguishable from 0 (close to a zero)."""


class CoverageError(ZetaToolkitError):
    """A zero table does not extend far enough for the requested sum."""


class TailBoundError(ZetaToolkitError):
    """A certified truncation tail exceeds the requested tolerance."""


class BracketingError(ZetaToolkitError):
    """Root bracketing failed or an interval did not contain exactly one root."""


class QuadratureError(ZetaToolkitError):
    """Adaptive quadrature failed to converge to the requested tolerance."""


class ZeroTableError(ZetaToolkitError):
    """Malformed zero-ordinate table."""

    def __init__(self, message, line_number=None):
        super().__init__(message)
        self.line_number = line_number
