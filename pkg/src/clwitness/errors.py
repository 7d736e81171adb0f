"""Exception hierarchy shared by every module."""


class DomainError(ValueError):
    """Input outside an operation's domain (bad dimensions, ranks, labels...)."""


class NotApplicable(ValueError):
    """The requested construction does not exist for these score vectors.

    Raised e.g. when the rule that should elect the Condorcet loser is Borda,
    or when both rules coincide.
    """


class ConstructionFault(RuntimeError):
    """A construction produced a profile that failed its own verification.

    This signals a bug, never a property of the input.
    """


class BudgetExceeded(RuntimeError):
    """Enumeration refused because the profile space is larger than the budget."""

    def __init__(self, count, budget):
        self.count = count
        self.budget = budget
        super().__init__(f"enumeration needs {count} profiles, budget is {budget}")
