"""Exception hierarchy shared across the toolkit.

The CLI maps these to distinct exit codes: invalid sequences/runs are 2,
parse failures 3, exhausted budgets/caps 4, violated preconditions 5.
"""


class BurnkitError(Exception):
    """Base class for all toolkit errors."""


class ParseError(BurnkitError):
    """Malformed input text (edge lists, intervals, certificates...)."""


class RejectedInputError(BurnkitError):
    """Input violates a documented precondition."""


class DisconnectedGraphError(RejectedInputError):
    """Operation requires a connected graph."""


class NotBurnableIn3Error(RejectedInputError):
    """Bounded three-step search failed; the input is not a connected cograph."""


class BudgetError(BurnkitError):
    """A configured resource cap was hit."""


class VertexCapError(BudgetError):
    """Graph is larger than the configured vertex cap."""

    def __init__(self, n: int, cap: int):
        super().__init__(f"graph has {n} vertices, exceeding the cap of {cap}")
        self.n = n
        self.cap = cap


class NodeBudgetError(BudgetError):
    """Search exhausted its node budget; carries the best bounds found."""

    def __init__(self, budget: int, lower: int, upper: int):
        super().__init__(
            f"node budget of {budget} exhausted; burning number in [{lower}, {upper}]"
        )
        self.budget = budget
        self.lower = lower
        self.upper = upper


class InvalidSequenceError(BurnkitError):
    """A sequence failed validation where a valid one was required."""
