"""Exception types raised across the package."""


class BadParams(ValueError):
    """Parameters outside the domain of a construction or formula."""


class EmptyInput(ValueError):
    pass


class NotGraded(ValueError):
    """The facet list does not close up to a graded lattice of the stated rank."""


class NotEulerian(ValueError):
    pass


class UnknownVertex(KeyError):
    pass


class NonIntegral(ArithmeticError):
    """A flag number that must be an integer came out fractional or negative."""


class AsymmetricResult(ArithmeticError):
    pass


class DegenerateDenominator(ZeroDivisionError):
    pass
