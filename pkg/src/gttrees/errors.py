"""Exception hierarchy. Every domain failure derives from :class:`GttError`."""


class GttError(Exception):
    """Base class for domain errors (the CLI maps these to exit code 1)."""


class NotATree(GttError):
    def __init__(self, violation: str):
        super().__init__(f"not a tree: {violation}")
        self.violation = violation


class NotInSet(GttError):
    pass


class IndexOutOfRange(GttError):
    pass


class NoTotalDominatingSet(GttError):
    pass


class TooLargeForOracle(GttError):
    pass


class OracleCapExceeded(TooLargeForOracle):
    pass


class NotAGammaTSet(GttError):
    pass


class IsStar(GttError):
    pass


class TooSmall(GttError):
    pass


class PreconditionViolated(GttError):
    def __init__(self, message: str, step: int | None = None):
        if step is not None:
            message = f"step {step}: {message}"
        super().__init__(message)
        self.step = step


class SizeMismatch(GttError):
    pass


class FormatError(GttError):
    pass
