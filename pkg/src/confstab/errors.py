"""Exception types raised across the package."""


class ConfStabError(Exception):
    pass


class InvalidPrime(ConfStabError, ValueError):
    pass


class InvalidDimension(ConfStabError, ValueError):
    pass


class InvalidBase(ConfStabError, ValueError):
    """The Browder base class was requested in odd ambient dimension."""


class ConstraintViolation(ConfStabError, ValueError):
    """A Dyer-Lashof application fails its degree constraints.

    ``index`` is the position (innermost-first) of the first failing
    application when raised while evaluating a word, else ``None``.
    """

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class OutOfBounds(ConfStabError, IndexError):
    """A query lies outside the validity bounds of a table or generator set."""


class OutOfRange(ConfStabError, ValueError):
    pass


class MismatchedBounds(ConfStabError, ValueError):
    pass
