"""
Exception hierarchy for springer-kit.

Every error raised on purpose by the library derives from SpringerKitError,
which is itself a ValueError so callers catching ValueError keep working.
"""


class SpringerKitError(ValueError):
    """Base class for all library errors."""
    exit_code = 1


class ParseError(SpringerKitError):
    """Text input could not be parsed (bad token, wrong separator, ...)."""
    exit_code = 1


class ValidationError(SpringerKitError):
    """A value is well-formed text but violates a structural invariant."""
    exit_code = 1


class SizeBoundError(SpringerKitError):
    """An enumeration or oracle bound was exceeded."""
    exit_code = 2

    def __init__(self, what: str, n: int, bound: int):
        self.what = what
        self.n = n
        self.bound = bound
        super().__init__(f"{what}: n={n} exceeds bound {bound}")


class ShapeMismatchError(SpringerKitError):
    """Two tableaux cannot be summed row by row."""
    exit_code = 1


class NotApplicableError(SpringerKitError):
    """An operation's precondition on the component class does not hold."""
    exit_code = 1


class VerificationError(SpringerKitError):
    """A property sweep found a counterexample."""
    exit_code = 3


def check_bound(what: str, n: int, bound: int):
    """Raise SizeBoundError if n exceeds bound."""
    if n > bound:
        raise SizeBoundError(what, n, bound)
