"""Exception types shared across the toolkit.

Every failure mode callers are expected to handle gets its own class, so the
command-line layer can map them onto exit codes without string matching.
"""


class HeavenlyError(Exception):
    """Base class for all toolkit errors."""


class InputError(HeavenlyError):
    """The caller supplied data that violates a documented precondition."""


class ReducibleExtensionError(InputError):
    """An extension step was attempted with a reducible polynomial.

    Carries the offending factorization so callers can see the evidence.
    """

    def __init__(self, message, factors=None):
        super().__init__(message)
        self.factors = factors or []


class ResourceCapError(HeavenlyError):
    """A computation exceeded a configured size or iteration cap.

    `partial` holds whatever partial result was available at the point the
    cap fired (for example a partially built splitting tower).
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
