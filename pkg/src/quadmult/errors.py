"""Exception types shared across the package."""


class QuadmultError(Exception):
    pass


class ParseError(QuadmultError, ValueError):
    """Malformed literal, polynomial or map-spec string."""


class ExactDivisionError(QuadmultError, ArithmeticError):
    """Division that was promised to be exact left a remainder."""


class NotAPerfectPowerError(QuadmultError, ArithmeticError):
    """Polynomial n-th root requested of a non-perfect-power."""


class UnsupportedDegreeError(QuadmultError, ValueError):
    """Operation outside its supported degree range."""


class DegenerateMapError(QuadmultError, ValueError):
    """Map specification does not define a degree-2 rational map."""


class InconsistentTripleError(QuadmultError, ValueError):
    """Fixed-point multiplier triple violates the trace relation."""


class NoAdmissibleLinearFormError(QuadmultError, RuntimeError):
    """No linear form avoided the dynatomic root set."""


class ClassificationError(QuadmultError, RuntimeError):
    """A classification sweep produced a survivor it cannot account for."""
