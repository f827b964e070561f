"""Exception types shared across the library."""


class StablesetError(Exception):
    """Base class for all library errors."""


class EmptyGround(StablesetError):
    """An operation received an empty carrier set."""


class EmptySolution(StablesetError):
    """The empty set was queried as a candidate solution."""


class PosetViolation(StablesetError):
    """A constructed order failed a poset axiom (implementation bug)."""


class OracleLimitExceeded(StablesetError):
    """Exponential enumeration was requested above the configured ceiling."""


class LimitExceeded(StablesetError):
    """An order/topology construction was requested above its size guard."""


class ParseError(StablesetError):
    """Malformed instance document."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class LoopEdge(ParseError):
    """An instance document contained a reflexive edge."""

    def __init__(self, index: int):
        super().__init__(f"loop edge at alternative {index}")
        self.index = index
