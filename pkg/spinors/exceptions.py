class DomainError(ValueError):
    """An input outside an operation's mathematical domain (non-unit axis, det != 1, ...)."""


class OffShellError(DomainError):
    """Energy, momentum and mass do not satisfy E^2 = p^2 + m^2."""


class GridFormatError(DomainError):
    """
    Malformed grid file.

    Args:
        message (str): what went wrong
        line (int | None): 1-based line number of the first bad record
    """

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
