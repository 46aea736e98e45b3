class GraphError(ValueError):
    """Malformed graph, unknown vertex/edge, or violated precondition."""


class BudgetExceeded(RuntimeError):
    """An exhaustive search hit its node-expansion cap before deciding."""

    def __init__(self, budget: int, what: str = "search"):
        super().__init__(f"{what} exceeded its budget of {budget} expansions")
        self.budget = budget


class InconsistencyError(AssertionError):
    """Two deciders that must agree did not (a bug, never an input problem)."""
