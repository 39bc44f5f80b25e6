"""Parameter calculus and reduced two-dimensional dynamics of the search.

The search operates on n items with one marked index tau. Everything the
iteration does happens in the plane spanned by the marked basis state and
the uniform superposition of the rest, so a single angle beta with
sin(beta) = 1/sqrt(n) and a 2x2 unitary describe the whole evolution.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import InfeasibleBudgetError

# Width of the snapping band around an exact arcsine boundary. Arguments
# within this band of 1 are treated as exactly 1; arguments beyond
# 1 + BOUNDARY_TOL are rejected. asin has a square-root singularity at 1,
# so an argument that is mathematically 1 but computed one ulp low would
# otherwise come back as asin(1 - 1e-16) = pi/2 - 1.5e-8.
BOUNDARY_TOL = 1e-12

# A trace is considered to have terminated successfully when the last
# probability is within this distance of 1.
CERTAINTY_TOL = 1e-10

HALF_PI = 0.5 * math.pi


def beta_angle(n: int) -> float:
    """Overlap angle of the uniform state with the marked item, arcsin(1/sqrt(n))."""
    if n < 1:
        raise ValueError(f"item count must be at least 1, got {n}")
    return math.asin(1.0 / math.sqrt(n))


def _check_searchable(n: int) -> None:
    if n < 2:
        raise ValueError(
            f"item count must be at least 2 for a nontrivial search, got {n}"
        )


def optimal_iterations(n: int) -> int:
    """Iteration count floor((pi/2 - beta)/(2*beta)) that maximizes success probability.

    The quotient can sit exactly on an integer (n = 4 gives exactly 1), and
    floating point may round it one ulp below the true value. The boundary
    is therefore rechecked with the defining inequality (2j+1)*beta <= pi/2
    under a small relative slack.
    """
    _check_searchable(n)
    b = beta_angle(n)
    j = math.floor((HALF_PI - b) / (2.0 * b))
    while (2 * (j + 1) + 1) * b <= HALF_PI * (1.0 + BOUNDARY_TOL):
        j += 1
    return j


def refined_iterations(n: int) -> int:
    """Whichever of j and j+1 brings (2j+1)*beta closest to pi/2, ties to the smaller."""
    b = beta_angle(n)
    j = optimal_iterations(n)
    d_here = abs((2 * j + 1) * b - HALF_PI)
    d_next = abs((2 * (j + 1) + 1) * b - HALF_PI)
    # n = 2 is an exact tie (pi/4 on either side); float noise must not
    # flip it away from the smaller candidate.
    if abs(d_here - d_next) <= BOUNDARY_TOL:
        return j
    return j if d_here < d_next else j + 1


def p_max(n: int) -> float:
    """Best success probability of the plain (phi = pi) search, sin^2((2j+1)*beta)."""
    b = beta_angle(n)
    j = optimal_iterations(n)
    return math.sin((2 * j + 1) * b) ** 2


def _schedule_argument(beta: float, j: int) -> float:
    """The quantity sin(pi/(4j+6))/sin(beta) whose arcsine fixes the phase."""
    return math.sin(math.pi / (4 * j + 6)) / math.sin(beta)


def min_certainty_steps(n: int) -> int:
    """Smallest budget J >= 0 for which a certainty phase exists.

    That is the smallest J with sin(pi/(4J+6)) <= sin(beta), up to the
    boundary slack. It coincides with optimal_iterations except at n = 4,
    where the boundary case J = 0 already works.
    """
    _check_searchable(n)
    b = beta_angle(n)
    # Start just below the analytic estimate and scan. The estimate is a
    # couple of steps low at most, so both loops run O(1) times.
    j = max(0, math.ceil((math.pi / b - 6.0) / 4.0) - 2)
    while _schedule_argument(b, j) > 1.0 + BOUNDARY_TOL:
        j += 1
    while j > 0 and _schedule_argument(b, j - 1) <= 1.0 + BOUNDARY_TOL:
        j -= 1
    return j


def certainty_phase(n: int, j: int) -> float:
    """Phase angle phi = 2*arcsin(sin(pi/(4j+6))/sin(beta)) that makes the
    search succeed with probability 1 at step j+1.

    Raises InfeasibleBudgetError when the arcsine argument exceeds 1 beyond
    the boundary slack; the error names the smallest workable budget.
    Arguments within the slack of 1 are snapped to exactly 1 (n = 4 with
    j = 0 is an exact boundary that float rounding lands a hair below).
    """
    _check_searchable(n)
    if 4 * j + 6 <= 0:
        raise ValueError(f"iteration budget {j} is out of range")
    b = beta_angle(n)
    a = _schedule_argument(b, j)
    if a > 1.0 + BOUNDARY_TOL:
        raise InfeasibleBudgetError(n, j, min_certainty_steps(n))
    if a >= 1.0 - BOUNDARY_TOL:
        return math.pi
    return 2.0 * math.asin(a)


@dataclass(frozen=True)
class SearchSpace:
    """Database size, marked index, and the derived overlap angle."""

    n: int
    tau: int
    beta: float

    @classmethod
    def create(cls, n: int, tau: int = 0) -> "SearchSpace":
        if not 0 <= tau < n:
            raise ValueError(f"marked index {tau} outside [0, {n})")
        return cls(n=n, tau=tau, beta=beta_angle(n))


@dataclass(frozen=True)
class PhaseSchedule:
    """Iteration budget j, phase angle phi, and x = sin(phi/2)*sin(beta).

    Measurement is meant to happen at step j+1.
    """

    j: int
    phi: float
    x: float

    @classmethod
    def certainty(cls, space: SearchSpace, j: int) -> "PhaseSchedule":
        phi = certainty_phase(space.n, j)
        return cls(j=j, phi=phi, x=math.sin(0.5 * phi) * math.sin(space.beta))

    @classmethod
    def with_phase(cls, space: SearchSpace, j: int, phi: float) -> "PhaseSchedule":
        return cls(j=j, phi=phi, x=math.sin(0.5 * phi) * math.sin(space.beta))


@dataclass(frozen=True)
class ReducedState:
    """Complex amplitudes on the marked item and on the uniform rest."""

    amp1: complex
    amp2: complex

    def norm_squared(self) -> float:
        return abs(self.amp1) ** 2 + abs(self.amp2) ** 2

    def success_probability(self) -> float:
        return abs(self.amp1) ** 2


@dataclass(frozen=True)
class ReducedOperator:
    """One search iteration as a 2x2 complex matrix."""

    matrix: np.ndarray


@dataclass(frozen=True)
class ProbabilityTrace:
    """Success probability per step, plus whether the run reached certainty."""

    entries: list = field(default_factory=list)  # (step index, probability)
    terminal: bool = False

    def probabilities(self) -> list:
        return [p for _, p in self.entries]

    def final_probability(self) -> float:
        return self.entries[-1][1]


def build_reduced_operator(beta: float, phi: float) -> ReducedOperator:
    """The 2x2 iteration matrix for overlap angle beta and phase phi.

    Both selective rotations use the same phase: the marked item picks up
    e^{i phi}, the projector on the uniform state picks up e^{i phi}, and
    the product carries an overall minus sign. At phi = pi every entry is
    real and the matrix is a plane rotation by 2*beta.
    """
    if not 0.0 < beta <= HALF_PI:
        raise ValueError(f"beta must lie in (0, pi/2], got {beta}")
    if not 0.0 < phi <= math.pi + 1e-9:
        raise ValueError(f"phi must lie in (0, pi], got {phi}")
    u = complex(math.cos(phi), math.sin(phi))
    s = math.sin(beta)
    c = math.cos(beta)
    m = np.array(
        [
            [-u * (1.0 + (u - 1.0) * s * s), -(u - 1.0) * s * c],
            [-u * (u - 1.0) * s * c, -u + (u - 1.0) * s * s],
        ],
        dtype=complex,
    )
    return ReducedOperator(matrix=m)


def initial_reduced_state(n: int) -> ReducedState:
    """Uniform superposition written in the reduced basis: (sin beta, cos beta)."""
    _check_searchable(n)
    b = beta_angle(n)
    return ReducedState(amp1=complex(math.sin(b)), amp2=complex(math.cos(b)))


def iterate(
    state: ReducedState, op: ReducedOperator, steps: int
) -> tuple:
    """Apply the operator `steps` times, recording the success probability
    after each application. Entries are numbered from 1."""
    if steps < 0:
        raise ValueError(f"steps must be nonnegative, got {steps}")
    m = op.matrix
    m11, m12 = complex(m[0, 0]), complex(m[0, 1])
    m21, m22 = complex(m[1, 0]), complex(m[1, 1])
    a1, a2 = complex(state.amp1), complex(state.amp2)
    entries = []
    for k in range(1, steps + 1):
        a1, a2 = m11 * a1 + m12 * a2, m21 * a1 + m22 * a2
        entries.append((k, abs(a1) ** 2))
    terminal = bool(entries) and abs(entries[-1][1] - 1.0) <= CERTAINTY_TOL
    return ReducedState(amp1=a1, amp2=a2), ProbabilityTrace(entries, terminal)


def run_certainty_search(n: int, j: int) -> ProbabilityTrace:
    """Full certainty run: phase for budget j, then j+1 iterations from uniform."""
    phi = certainty_phase(n, j)
    op = build_reduced_operator(beta_angle(n), phi)
    _, trace = iterate(initial_reduced_state(n), op, j + 1)
    return trace
