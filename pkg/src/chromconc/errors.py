"""Exception types shared across the package."""


class GuardExceeded(ValueError):
    """An exact solver was asked to work above its configured size limit."""

    def __init__(self, what, size, limit):
        self.what = what
        self.size = size
        self.limit = limit
        super().__init__(f"exact solve refused: {what} needs n <= {limit}, got n = {size}")


class EnumerationBudgetExceeded(GuardExceeded):
    """Exhaustive subset enumeration would exceed its budget."""

    def __init__(self, what, size, limit):
        self.what = what
        self.size = size
        self.limit = limit
        ValueError.__init__(
            self, f"enumeration refused: {what} needs {size} subsets, budget is {limit}"
        )


class GraphTooLarge(MemoryError):
    """Requested graph cannot be held as an explicit adjacency relation."""
