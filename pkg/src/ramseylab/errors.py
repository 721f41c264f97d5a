"""Exception types shared across the package.

Exit-code mapping lives in the CLI: budget/ceiling/time errors map to 2,
failed property checks to 3, usage errors to 1.
"""


class RamseyLabError(Exception):
    pass


class ApplicabilityError(RamseyLabError):
    """A bound or formula was invoked outside its stated preconditions."""

    def __init__(self, clause: str):
        super().__init__(f"precondition violated: {clause}")
        self.clause = clause


class BudgetExceededError(RamseyLabError):
    """A node or enumeration budget ran out before the computation finished."""


class TimeBudgetError(RamseyLabError):
    """Wall-clock budget ran out; carries the best bound known so far."""

    def __init__(self, message: str, lower_bound: int | None = None):
        super().__init__(message)
        self.lower_bound = lower_bound


class CeilingReachedError(RamseyLabError):
    """The search ceiling max_n was reached with good colorings still present.

    The true value is then known to exceed max_n; `lower_bound` is max_n + 1
    and `witness` is a good coloring of [1, max_n].
    """

    def __init__(self, lower_bound: int, witness=None, nodes: int | None = None):
        super().__init__(f"ceiling reached: value >= {lower_bound}")
        self.lower_bound = lower_bound
        self.witness = witness
        self.nodes = nodes
