import math

import numpy as np
import pytest

from certain_grover.core import (
    beta_angle,
    build_reduced_operator,
    certainty_phase,
    initial_reduced_state,
    iterate,
    min_certainty_steps,
)
from certain_grover.errors import ReductionError
from certain_grover.fullsim import (
    MAX_FULL_N,
    FullState,
    apply_diffusion,
    apply_diffusion_hadamard,
    apply_marked_phase,
    full_iterate,
    reduce,
    uniform_state,
)

NORM_TOL = 1e-10
HADAMARD_TOL = 1e-12
EQUIV_TOL = 1e-10
INDEP_TOL = 1e-12


def test_uniform_state():
    state = uniform_state(10)
    assert state.n == 10
    assert np.abs(state.amplitudes - 1.0 / math.sqrt(10)).max() < 1e-15
    assert abs(state.norm_squared() - 1.0) < 1e-15


def test_uniform_state_bounds():
    with pytest.raises(ValueError):
        uniform_state(0)
    with pytest.raises(ValueError):
        uniform_state(MAX_FULL_N + 1)
    # A smaller explicit cap is honored too.
    with pytest.raises(ValueError):
        uniform_state(100, max_n=50)


def test_apply_marked_phase_touches_one_amplitude():
    state = uniform_state(6)
    phased = apply_marked_phase(state, 2, 1.2)
    assert np.abs(np.delete(phased.amplitudes, 2) - np.delete(state.amplitudes, 2)).max() == 0.0
    expected = state.amplitudes[2] * complex(math.cos(1.2), math.sin(1.2))
    assert abs(phased.amplitudes[2] - expected) < 1e-15
    with pytest.raises(ValueError):
        apply_marked_phase(state, 6, 1.2)


def test_marked_phase_special_angles():
    state = uniform_state(4)
    assert np.abs(apply_marked_phase(state, 1, 0.0).amplitudes - state.amplitudes).max() == 0.0
    negated = apply_marked_phase(state, 1, math.pi)
    assert abs(negated.amplitudes[1] + 0.5) < 1e-15
    quarter = apply_marked_phase(state, 2, math.pi / 2)
    assert abs(quarter.amplitudes[2] - 0.5j) < 1e-15


def test_diffusion_special_angles():
    rng = np.random.default_rng(11)
    amps = rng.standard_normal(9) + 1j * rng.standard_normal(9)
    amps /= np.linalg.norm(amps)
    state = FullState(amps)
    # Zero phase leaves only the overall minus sign.
    assert np.abs(apply_diffusion(state, 0.0).amplitudes + amps).max() < 1e-15
    # Phase pi is the usual inversion about the average.
    about_mean = 2.0 * amps.mean() - amps
    assert np.abs(apply_diffusion(state, math.pi).amplitudes - about_mean).max() < 1e-14


def test_diffusion_closed_form_matches_hadamard_conjugation():
    rng = np.random.default_rng(5)
    for k in (1, 3, 6, 10):
        n = 2**k
        amps = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        amps /= np.linalg.norm(amps)
        state = FullState(amps)
        for phi in (0.9, math.pi):
            a = apply_diffusion(state, phi).amplitudes
            b = apply_diffusion_hadamard(state, phi).amplitudes
            assert np.abs(a - b).max() < HADAMARD_TOL


def test_hadamard_path_rejects_non_power_of_two():
    with pytest.raises(ValueError):
        apply_diffusion_hadamard(uniform_state(6), 1.0)


def test_full_iterate_norm_preserved():
    state = uniform_state(300)
    final, _ = full_iterate(state, 7, 2.1, 200)
    assert abs(final.norm_squared() - 1.0) < NORM_TOL


def test_full_iterate_standard_phase_closed_form():
    # Seven phase-pi steps on 100 items leave the marked probability at
    # sin^2(15 beta), the standard amplitude amplification value.
    n, tau, steps = 100, 37, 7
    _, trace = full_iterate(uniform_state(n), tau, math.pi, steps)
    expected = math.sin((2 * steps + 1) * beta_angle(n)) ** 2
    assert abs(trace.final_probability() - expected) < 1e-12


def test_single_standard_step_on_four_items_is_exact():
    # n = 4 is the classic case where one phase-pi iteration already
    # finds the marked item with probability one.
    _, trace = full_iterate(uniform_state(4), 0, math.pi, 1)
    assert abs(trace.final_probability() - 1.0) < 1e-12


def test_full_iterate_zero_steps_is_identity():
    state = uniform_state(7)
    final, trace = full_iterate(state, 3, 1.4, 0)
    assert np.abs(final.amplitudes - state.amplitudes).max() == 0.0
    assert trace.entries == []
    assert not trace.terminal


def test_full_iterate_certainty():
    for n in (2, 8, 100):
        j = min_certainty_steps(n)
        phi = certainty_phase(n, j)
        _, trace = full_iterate(uniform_state(n), 0, phi, j + 1)
        assert abs(trace.final_probability() - 1.0) < NORM_TOL
        assert trace.terminal


def test_marked_index_independence():
    n, phi, steps = 50, 1.9, 12
    base = full_iterate(uniform_state(n), 0, phi, steps)[1].probabilities()
    for tau in (1, 17, 49):
        other = full_iterate(uniform_state(n), tau, phi, steps)[1].probabilities()
        assert np.abs(np.array(base) - np.array(other)).max() < INDEP_TOL


def test_reduce_inverts_the_embedding():
    state = uniform_state(12)
    reduced = reduce(state, 4)
    expected = initial_reduced_state(12)
    assert abs(reduced.amp1 - expected.amp1) < 1e-14
    assert abs(reduced.amp2 - expected.amp2) < 1e-14


def test_reduce_of_a_concentrated_state():
    amps = np.zeros(5, dtype=complex)
    amps[2] = 1.0
    reduced = reduce(FullState(amps), 2)
    assert reduced.amp1 == 1.0
    assert reduced.amp2 == 0.0


def test_reduce_then_iterate_commutes_with_iterate_then_reduce():
    for n, tau, phi, steps in [(10, 3, 1.1, 9), (64, 0, 2.8, 20), (257, 100, math.pi, 5)]:
        full_final, _ = full_iterate(uniform_state(n), tau, phi, steps)
        from_full = reduce(full_final, tau)

        op = build_reduced_operator(beta_angle(n), phi)
        from_reduced, _ = iterate(initial_reduced_state(n), op, steps)

        assert abs(from_full.amp1 - from_reduced.amp1) < EQUIV_TOL
        assert abs(from_full.amp2 - from_reduced.amp2) < EQUIV_TOL


def test_reduce_rejects_states_outside_the_plane():
    amps = uniform_state(8).amplitudes.copy()
    amps[3] += 1e-6
    with pytest.raises(ReductionError):
        reduce(FullState(amps), 0)


def test_reduce_validates_the_marked_index():
    with pytest.raises(ValueError):
        reduce(uniform_state(4), 4)
