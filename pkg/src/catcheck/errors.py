"""Exception types shared by every module."""


class CatCheckError(Exception):
    pass


class InputError(CatCheckError, ValueError):
    """Malformed or inconsistent input (unknown names, bad shapes, ...)."""


class CapExceeded(CatCheckError):
    """A size cap was hit before an exhaustive computation."""

    def __init__(self, what, size, cap):
        self.what = what
        self.size = size
        self.cap = cap
        super().__init__(f"{what}: size {size} exceeds cap {cap}")


class PreconditionError(CatCheckError, ValueError):
    """An argument violates an operation's precondition, e.g. a leg that
    does not equalize."""
