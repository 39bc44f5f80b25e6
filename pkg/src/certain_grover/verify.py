"""Self-contained consistency suite behind the verify command.

Every check recomputes its expectations from the closed forms; nothing is
compared against stored constants. The phi_perturb argument is a test hook:
it shifts the certainty phase before the measurement check, which must then
fail, demonstrating the check has teeth.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import fullsim
from .core import (
    BOUNDARY_TOL,
    HALF_PI,
    PhaseSchedule,
    SearchSpace,
    beta_angle,
    build_reduced_operator,
    certainty_phase,
    initial_reduced_state,
    iterate,
    min_certainty_steps,
    optimal_iterations,
)
from .errors import InfeasibleBudgetError
from .simulate import run_trace
from .so3 import RotationSpec, total_angle_omega
from .tables import table_one, table_two

UNITARITY_TOL = 1e-12
STANDARD_LIMIT_TOL = 1e-12
CERTAINTY_TOL = 1e-10
CROSS_TOL = 1e-10
SYMMETRY_TOL = 1e-12
IDENTITY_TOL = 1e-12
ANGLE_TOL = 1e-10

CERTAINTY_SIZES = (2, 3, 4, 5, 8, 16, 64, 100, 1000, 10**4, 10**6)
DEFAULT_SEED = 20250817


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def check_reduced_operator_unitarity() -> CheckResult:
    worst = 0.0
    eye = np.eye(2)
    for n in (2, 3, 4, 7, 8, 100, 10**4):
        beta = beta_angle(n)
        for phi in (0.1, 0.5, 1.0, 2.0, 3.0, math.pi):
            q = build_reduced_operator(beta, phi).matrix
            worst = max(worst, float(np.abs(q @ q.conj().T - eye).max()))
    return CheckResult(
        "reduced_operator_unitarity",
        worst <= UNITARITY_TOL,
        f"max |Q Q+ - I| = {worst:.3e} (tol {UNITARITY_TOL:.0e})",
    )


def check_standard_phase_limit(max_n: int) -> CheckResult:
    sizes = [n for n in list(range(2, 65)) + [100, 10**4] if n <= max_n]
    worst = 0.0
    for n in sizes:
        beta = beta_angle(n)
        op = build_reduced_operator(beta, math.pi)
        steps = 2 * optimal_iterations(n)
        _, trace = iterate(initial_reduced_state(n), op, max(steps, 1))
        for k, p in trace.entries:
            expected = math.sin((2 * k + 1) * beta) ** 2
            worst = max(worst, abs(p - expected))
    return CheckResult(
        "standard_phase_limit",
        worst <= STANDARD_LIMIT_TOL,
        f"max |P_j - sin^2((2j+1)b)| = {worst:.3e} over {len(sizes)} sizes",
    )


def check_certainty_at_measurement(max_n: int, phi_perturb: float) -> CheckResult:
    worst = 0.0
    count = 0
    for n in CERTAINTY_SIZES:
        if n > max_n:
            continue
        j_min = min_certainty_steps(n)
        for j in (j_min, j_min + 3):
            phi = certainty_phase(n, j) - phi_perturb
            for formalism in ("reduced", "so3", "spectral"):
                run = run_trace(n, j=j, phi=phi, steps=j + 1, formalism=formalism)
                worst = max(worst, abs(run.final_probability() - 1.0))
                count += 1
    return CheckResult(
        "certainty_at_measurement",
        worst <= CERTAINTY_TOL,
        f"max |P(J+1) - 1| = {worst:.3e} over {count} runs",
    )


def check_schedule_identity(max_n: int) -> CheckResult:
    worst_identity = 0.0
    worst_alpha = 0.0
    worst_omega = 0.0
    for n in CERTAINTY_SIZES:
        if n > max_n:
            continue
        space = SearchSpace.create(n)
        for j in (min_certainty_steps(n), min_certainty_steps(n) + 3):
            sched = PhaseSchedule.certainty(space, j)
            x = sched.x
            worst_identity = max(
                worst_identity, abs(2 * math.acos(x) - 4 * (j + 1) * math.asin(x))
            )
            spec = RotationSpec.for_schedule(space.beta, sched.phi)
            worst_alpha = max(worst_alpha, abs(spec.alpha - 2 * math.pi / (2 * j + 3)))
            omega = total_angle_omega(space.beta, sched.phi)
            worst_omega = max(worst_omega, abs(omega - (j + 1) * spec.alpha))
    passed = (
        worst_identity < IDENTITY_TOL
        and worst_alpha <= ANGLE_TOL
        and worst_omega <= ANGLE_TOL
    )
    return CheckResult(
        "schedule_identity",
        passed,
        f"identity {worst_identity:.3e}, alpha {worst_alpha:.3e}, omega {worst_omega:.3e}",
    )


def check_cross_formalism_agreement(
    max_n: int, cases: int, seed: int
) -> CheckResult:
    rng = np.random.default_rng(seed)
    cap = min(4096, max_n)
    worst_pair = 0.0
    worst_sym = 0.0
    for _ in range(cases):
        n = int(rng.integers(2, cap + 1))
        tau = int(rng.integers(0, n))
        phi = math.pi * (1.0 - float(rng.random()))
        steps = int(rng.integers(1, 101))

        traces = {}
        for formalism in ("reduced", "so3", "spectral"):
            traces[formalism] = run_trace(
                n, tau=tau, phi=phi, steps=steps, formalism=formalism
            ).probabilities()

        # Step the dense oracle manually so symmetry can be checked throughout.
        state = fullsim.uniform_state(n)
        full_probs = [1.0 / n]
        for _ in range(steps):
            state = fullsim.apply_diffusion(
                fullsim.apply_marked_phase(state, tau, phi), phi
            )
            amps = state.amplitudes
            full_probs.append(float(abs(amps[tau]) ** 2))
            if n > 1:
                rest = np.delete(amps, tau)
                worst_sym = max(worst_sym, float(np.abs(rest - rest[0]).max()))
        traces["full"] = full_probs

        arrays = list(traces.values())
        for i in range(len(arrays)):
            for k in range(i + 1, len(arrays)):
                diff = float(np.abs(np.subtract(arrays[i], arrays[k])).max())
                worst_pair = max(worst_pair, diff)
    passed = worst_pair <= CROSS_TOL and worst_sym <= SYMMETRY_TOL
    return CheckResult(
        "cross_formalism_agreement",
        passed,
        f"{cases} cases (n <= {cap}): pairwise {worst_pair:.3e}, symmetry {worst_sym:.3e}",
    )


def check_feasibility_frontier(max_n: int) -> CheckResult:
    upper = min(10**4, max_n)
    failures = []
    for n in range(2, upper + 1):
        j_op = optimal_iterations(n)
        if n == 4:
            if abs(certainty_phase(4, 0) - math.pi) > BOUNDARY_TOL:
                failures.append("phi(4, 0) != pi")
            continue
        try:
            certainty_phase(n, j_op - 1)
        except InfeasibleBudgetError:
            continue
        failures.append(f"phi({n}, {j_op - 1}) unexpectedly feasible")
    detail = (
        f"n in [2, {upper}]: budget j_op - 1 rejected everywhere except n = 4"
        if not failures
        else "; ".join(failures[:3])
    )
    return CheckResult("feasibility_frontier", not failures, detail)


def check_table_self_consistency() -> CheckResult:
    problems = []
    rows1 = table_one()
    for r in rows1:
        if not 0.0 < r.ratio <= 1.0 + BOUNDARY_TOL:
            problems.append(f"table 1 ratio out of range at n={r.n}")
        if r.j_op != optimal_iterations(r.n):
            problems.append(f"table 1 j_op mismatch at n={r.n}")
    if [r.j_op for r in rows1] != sorted(r.j_op for r in rows1):
        problems.append("table 1 j_op not monotone in n")

    for r in table_two():
        if r.steps != min_certainty_steps(r.n) + 1:
            problems.append(f"table 2 step count mismatch at n={r.n}")
        x = math.sin(r.phi / 2) * math.sin(beta_angle(r.n))
        if abs(x - math.sin(math.pi / (4 * (r.steps - 1) + 6))) > BOUNDARY_TOL:
            problems.append(f"table 2 phase off schedule at n={r.n}")

    big = 2**56
    deficit = 1.0 - (2 * optimal_iterations(big) + 1) * beta_angle(big) / HALF_PI
    if not 1e-9 <= deficit <= 1e-8:
        problems.append(f"quarter-turn deficit at 2^56 is {deficit:.3e}")
    detail = (
        f"tables internally consistent; deficit(2^56) = {deficit:.3e}"
        if not problems
        else "; ".join(problems[:3])
    )
    return CheckResult("table_self_consistency", not problems, detail)


def run_verification(
    max_n: int = 10**4,
    phi_perturb: float = 0.0,
    cases: int = 200,
    seed: int = DEFAULT_SEED,
) -> "list[CheckResult]":
    return [
        check_reduced_operator_unitarity(),
        check_standard_phase_limit(max_n),
        check_certainty_at_measurement(max_n, phi_perturb),
        check_schedule_identity(max_n),
        check_cross_formalism_agreement(max_n, cases, seed),
        check_feasibility_frontier(max_n),
        check_table_self_consistency(),
    ]


def all_passed(results: "list[CheckResult]") -> bool:
    return all(r.passed for r in results)
