"""Exception taxonomy shared by the whole package.

Three failure modes matter to callers: the inputs live in incompatible
rings, the requested value genuinely does not exist (non-invertible
element, constraint violated), or it exists but the stored precision
window is too small to determine it.  The CLI maps these to distinct
exit codes.
"""


class GrasstauError(Exception):
    """Base class for all library errors."""


class RingMismatchError(GrasstauError):
    """Operands belong to different coefficient rings or base fields."""


class DomainError(GrasstauError):
    """A precondition on the mathematical inputs is violated."""


class NotInvertibleError(DomainError):
    """Inversion was requested for an element that has no inverse."""


class PrecisionError(GrasstauError):
    """The truncation window is too small to determine the result."""
