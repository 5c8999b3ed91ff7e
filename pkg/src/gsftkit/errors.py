"""Exception hierarchy.

``InputError`` and its subclasses signal bad user input (CLI exit code 2).
``InvariantViolation`` signals that an internal consistency check failed,
which means a bug rather than bad input (CLI exit code 3).
"""


class GSFTError(Exception):
    pass


class InputError(GSFTError):
    pass


class GroupAxiomError(InputError):
    pass


class DomainMismatchError(InputError):
    """Objects over different groups (or coefficient domains) were combined."""


class ShapeMismatchError(InputError):
    pass


class NegativeEntryError(InputError):
    pass


class ActionError(InputError):
    """A graph action is not free, not an action, or not by automorphisms."""


class HypothesisError(InputError):
    """A theorem-style precondition does not hold for the given input."""


class NotInertError(HypothesisError):
    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class BudgetExceeded(InputError):
    pass


class InvariantViolation(GSFTError):
    pass
