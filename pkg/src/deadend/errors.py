class DeadEndError(Exception):
    pass


class InvalidOption(DeadEndError, ValueError):
    pass


class NotationError(DeadEndError, ValueError):
    def __init__(self, message: str, offset: int = 0, expected: str = "") -> None:
        super().__init__(message)
        self.offset = offset
        self.expected = expected


class NotALeftEnd(NotationError):
    pass


class ZeroGame(DeadEndError, ValueError):
    pass


class NotAnAtom(DeadEndError, ValueError):
    pass


class Overflow(DeadEndError, RuntimeError):
    """A resource budget ran out; ``progress`` describes how far the job got."""

    def __init__(self, message: str, progress: dict | None = None) -> None:
        super().__init__(message)
        self.progress = progress or {}
