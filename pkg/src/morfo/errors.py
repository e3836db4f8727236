"""Shared error types for resource loading."""


class LoadError(ValueError):
    """A data file (dictionary, rule table, mapping, ...) failed to load.

    Carries the offending line number when one is known.
    """

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no
