class FactorLabError(Exception):
    """Base class for library errors."""


class ParseError(FactorLabError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class LoopRejected(FactorLabError, ValueError):
    pass


class InfeasibleSize(FactorLabError):
    """A configured work bound would be exceeded."""


class NoPerfectMatching(FactorLabError):
    pass


class NotPerfect(FactorLabError, ValueError):
    pass


class DegreeNotThree(FactorLabError, ValueError):
    pass


class MultiedgeAtVertex(FactorLabError, ValueError):
    pass


class EdgeMissing(FactorLabError, ValueError):
    pass


class StaleVertex(FactorLabError, KeyError):
    pass


class UnknownName(FactorLabError, KeyError):
    pass


class BadParams(FactorLabError, ValueError):
    pass


class UnknownTheoremId(FactorLabError, KeyError):
    pass


class ScopeTooLarge(FactorLabError):
    pass
