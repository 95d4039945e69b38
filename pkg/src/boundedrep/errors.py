"""Exception hierarchy shared by the library and the command line."""


class InvalidInputError(ValueError):
    """Argument outside an operation's domain (CLI exit code 2)."""


class InvalidDiscriminantError(InvalidInputError):
    pass


class ParityError(InvalidInputError):
    pass


class ConsistencyError(RuntimeError):
    """A verified postcondition failed; indicates a bug (CLI exit code 3)."""
