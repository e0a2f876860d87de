"""Exception types raised across the package."""


class SSLabError(ValueError):
    """Base class for all package errors."""


class NonPrimitive(SSLabError):
    pass


class ZeroSlope(SSLabError):
    pass


class NotUnimodular(SSLabError):
    pass


class BadBoundaryIndex(SSLabError, IndexError):
    pass


class NotNormalized(SSLabError):
    pass


class NotQHS(SSLabError):
    """The manifold is not a rational homology sphere."""


class BudgetExceeded(SSLabError):
    def __init__(self, needed, budget):
        super().__init__(f"search needs {needed} steps, budget is {budget}")
        self.needed = needed
        self.budget = budget


class TooLarge(BudgetExceeded):
    pass


class NoTorsionSlope(SSLabError):
    pass


class NotUnique(SSLabError):
    pass


class RankNotOne(SSLabError):
    pass


class EmptyCones(SSLabError):
    pass


class BadP(SSLabError):
    pass


class ParseError(SSLabError):
    pass
