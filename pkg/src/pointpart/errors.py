"""Exception types shared across the package."""


class BudgetExceededError(RuntimeError):
    """An exact search ran out of its node budget.

    The result is *unknown*, never wrong: callers must treat this as a
    distinct outcome, not as an answer.
    """

    def __init__(self, what: str, budget: int):
        super().__init__(f"{what}: node budget of {budget} exceeded (result unknown)")
        self.what = what
        self.budget = budget


class GraphParseError(ValueError):
    """A graph file or stream did not match the documented format."""
