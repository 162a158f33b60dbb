"""Exception hierarchy shared by every skewlab module."""


class SkewLabError(Exception):
    pass


class ConstructionError(SkewLabError):
    pass


class CapacityError(SkewLabError):
    pass


class DegreeOverflow(SkewLabError):
    """A product in a bounded-degree polynomial window left the window."""


class RingMismatch(SkewLabError):
    pass


class EndoMismatch(SkewLabError):
    pass


class NotAnEndomorphism(SkewLabError):
    pass


class DegenerateRing(SkewLabError):
    pass


class BudgetExceeded(SkewLabError):
    pass


class CatalogError(SkewLabError):
    pass


class ConfigError(SkewLabError):
    def __init__(self, message, line=None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)
