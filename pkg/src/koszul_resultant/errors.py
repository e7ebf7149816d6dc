"""Exception hierarchy shared by the library and the command line."""


class InputError(ValueError):
    """Malformed or out-of-domain input (CLI exit code 2)."""


class NilpotencyError(AssertionError):
    """A sequence of matrices that was required to be a complex is not one."""

    def __init__(self, message, location=None):
        super().__init__(message)
        self.location = location


class DegenerateComplexError(ArithmeticError):
    """No minor selection with nonzero denominators exists for the complex."""

    def __init__(self, message, step=None, rank=None, needed=None):
        super().__init__(message)
        self.step = step
        self.rank = rank
        self.needed = needed


class SelectionError(ArithmeticError):
    """A supplied minor selection has a vanishing denominator."""


class ExactnessError(ArithmeticError):
    """The minor ratio of an integer Koszul complex was not an integer."""


class ResultantAnomaly(RuntimeError):
    """Selection failed although the complex is exact (CLI exit code 3)."""
