"""Exception hierarchy shared by the whole package."""


class AlgebraError(Exception):
    """Base class for all errors raised by this package."""


class DivisionByZero(AlgebraError, ZeroDivisionError):
    """Division by the zero scalar."""


class PoleError(AlgebraError):
    """A structure function was evaluated at a pole (or its reciprocal at a zero)."""

    def __init__(self, argument, message=None):
        self.argument = argument
        super().__init__(message or f"pole at psi argument {argument}")


class PoleAtRootOfUnity(AlgebraError):
    """A denominator vanishes after specializing q at a root of unity."""


class SymbolicParameterPresent(AlgebraError):
    """A scalar expected to be a pure function of q contains parameter symbols."""


class ActionUndefined(AlgebraError):
    """A current operator is not defined on a vector (a coefficient hits a pole).

    The offending psi argument is kept so callers can report it.
    """

    def __init__(self, argument, message=None):
        self.argument = argument
        super().__init__(message or f"action undefined: pole at psi argument {argument}")


class QuotientViolation(AlgebraError):
    """A projected action dropped/produced a term that the construction requires to vanish."""


class ConditionViolated(AlgebraError):
    """A module construction predicate fails.  Carries the predicate name."""

    def __init__(self, predicate, message=None):
        self.predicate = predicate
        super().__init__(message or f"condition violated: {predicate}")
