"""Amplitude amplification with a phase tuned so the final measurement is certain.

The package computes, for a search over n items, the step budget and the
selective-phase angle under which the marked item is measured with
probability one, and simulates the walk in four interchangeable pictures:
a reduced two-dimensional unitary, a rotation of a polarization vector on
the sphere, a spectral decomposition, and a dense length-n state vector.
"""

from .core import (
    BOUNDARY_TOL,
    CERTAINTY_TOL,
    PhaseSchedule,
    ProbabilityTrace,
    ReducedOperator,
    ReducedState,
    SearchSpace,
    beta_angle,
    build_reduced_operator,
    certainty_phase,
    initial_reduced_state,
    iterate,
    min_certainty_steps,
    optimal_iterations,
    p_max,
    refined_iterations,
    run_certainty_search,
)
from .errors import DegenerateAxisError, InfeasibleBudgetError, ReductionError
from .fullsim import (
    MAX_FULL_N,
    FullState,
    apply_diffusion,
    apply_marked_phase,
    full_iterate,
    reduce,
    uniform_state,
)
from .simulate import TraceRun, run_trace
from .so3 import (
    Polarization,
    RotationMatrix,
    RotationSpec,
    pivot_point,
    polarization_of,
    rodrigues_step,
    rotation_angle,
    rotation_axis,
    rotation_matrix,
    total_angle_omega,
)
from .spectral import SpectralDecomposition, diagonalize, operator_power
from .tables import TableOneRow, TableTwoRow, table_one, table_two
from .verify import CheckResult, run_verification

__version__ = "0.1.0"

__all__ = [
    "BOUNDARY_TOL",
    "CERTAINTY_TOL",
    "MAX_FULL_N",
    "CheckResult",
    "DegenerateAxisError",
    "FullState",
    "InfeasibleBudgetError",
    "PhaseSchedule",
    "Polarization",
    "ProbabilityTrace",
    "ReducedOperator",
    "ReducedState",
    "ReductionError",
    "RotationMatrix",
    "RotationSpec",
    "SearchSpace",
    "SpectralDecomposition",
    "TableOneRow",
    "TableTwoRow",
    "TraceRun",
    "apply_diffusion",
    "apply_marked_phase",
    "beta_angle",
    "build_reduced_operator",
    "certainty_phase",
    "diagonalize",
    "full_iterate",
    "initial_reduced_state",
    "iterate",
    "min_certainty_steps",
    "operator_power",
    "optimal_iterations",
    "p_max",
    "pivot_point",
    "polarization_of",
    "reduce",
    "refined_iterations",
    "rodrigues_step",
    "rotation_angle",
    "rotation_axis",
    "rotation_matrix",
    "run_certainty_search",
    "run_trace",
    "run_verification",
    "table_one",
    "table_two",
    "total_angle_omega",
    "uniform_state",
]
