"""Exception types shared across the package."""


class EmptyCorpusError(ValueError):
    """Raised when an index build receives no files or no usable tokens."""


class NgidxParseError(ValueError):
    """A malformed NGIDX file; carries the offending line number."""

    def __init__(self, message: str, *, line: int, path: str | None = None):
        where = f"{path}:{line}" if path else f"line {line}"
        super().__init__(f"{where}: {message}")
        self.line = line
        self.path = path
