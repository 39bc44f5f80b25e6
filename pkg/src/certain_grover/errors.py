"""Error types shared across the package."""


class InfeasibleBudgetError(ValueError):
    """Raised when no real phase angle exists for the requested iteration budget.

    Carries the smallest budget that would work so callers can report it.
    """

    def __init__(self, n: int, j: int, min_feasible_j: int):
        self.n = n
        self.j = j
        self.min_feasible_j = min_feasible_j
        super().__init__(
            f"budget j={j} admits no real phase for n={n}; "
            f"smallest feasible budget is J={min_feasible_j}"
        )


class ReductionError(ValueError):
    """Raised when a full state cannot be mapped to the two-dimensional form
    because the unmarked amplitudes are not all equal."""


class DegenerateAxisError(ValueError):
    """Raised when the rotation axis is undefined (beta = pi/2, a one-item space)."""
