"""Run a search trace in any of the four formalisms and compare the results.

The entry point is run_trace. It fills in defaults from the parameter
calculus (fewest certain steps, matching phase) and dispatches to the
requested implementation; every trace starts with the step-0 probability 1/n.
"""

from dataclasses import dataclass

from . import fullsim, spectral
from .core import (
    CERTAINTY_TOL,
    PhaseSchedule,
    SearchSpace,
    build_reduced_operator,
    initial_reduced_state,
    iterate,
    min_certainty_steps,
)
FORMALISMS = ("reduced", "so3", "spectral", "full")


@dataclass(frozen=True)
class TraceRun:
    """One completed trace with the parameters that produced it."""

    n: int
    tau: int
    j: "int | None"
    phi: float
    formalism: str
    entries: "list[tuple[int, float]]"
    terminal: bool

    def probabilities(self) -> "list[float]":
        return [p for _, p in self.entries]

    def final_probability(self) -> float:
        return self.entries[-1][1]


def run_trace(
    n: int,
    tau: int = 0,
    j: "int | None" = None,
    phi: "float | None" = None,
    formalism: str = "reduced",
    steps: "int | None" = None,
    max_full_n: int = fullsim.MAX_FULL_N,
) -> TraceRun:
    """Simulate `steps` applications of the phase-phi search operator.

    With j given and phi omitted, phi is the certainty phase for that budget
    and steps defaults to j + 1 (measurement time). With phi given and j
    omitted, steps must be supplied. With both omitted, j defaults to the
    smallest feasible budget.
    """
    if formalism not in FORMALISMS:
        raise ValueError(f"unknown formalism {formalism!r}; choose from {FORMALISMS}")
    space = SearchSpace.create(n, tau)

    if phi is None:
        if j is None:
            j = min_certainty_steps(n)
        schedule = PhaseSchedule.certainty(space, j)
        phi = schedule.phi
    elif j is not None:
        schedule = PhaseSchedule.with_phase(space, j, phi)

    if steps is None:
        if j is None:
            raise ValueError("steps is required when only phi is given")
        steps = j + 1
    if steps < 0:
        raise ValueError(f"steps must be nonnegative, got {steps}")

    p0 = 1.0 / n
    if formalism == "reduced":
        op = build_reduced_operator(space.beta, phi)
        _, trace = iterate(initial_reduced_state(n), op, steps)
        entries = trace.entries
    elif formalism == "so3":
        trace = so3_trace_for(space, phi, steps)
        entries = trace.entries
    elif formalism == "spectral":
        probs = spectral.power_trace_probabilities(space.beta, phi, steps)
        entries = list(enumerate(probs, start=1))
    else:
        state = fullsim.uniform_state(n, max_n=max_full_n)
        _, trace = fullsim.full_iterate(state, tau, phi, steps)
        entries = trace.entries

    entries = [(0, p0)] + [(k, float(p)) for k, p in entries]
    terminal = abs(entries[-1][1] - 1.0) <= CERTAINTY_TOL
    return TraceRun(
        n=n, tau=tau, j=j, phi=phi, formalism=formalism,
        entries=entries, terminal=terminal,
    )


def so3_trace_for(space: SearchSpace, phi: float, steps: int):
    """Rotation-picture trace for an explicit phase (any step count)."""
    from .core import ProbabilityTrace
    from .so3 import RotationSpec, polarization_of, rodrigues_step

    spec = RotationSpec.for_schedule(space.beta, phi)
    r = polarization_of(initial_reduced_state(space.n))
    entries = []
    for k in range(1, steps + 1):
        r = rodrigues_step(r, spec, spec.alpha)
        entries.append((k, 0.5 * (r.z + 1.0)))
    terminal = bool(entries) and abs(entries[-1][1] - 1.0) <= CERTAINTY_TOL
    return ProbabilityTrace(entries, terminal)
