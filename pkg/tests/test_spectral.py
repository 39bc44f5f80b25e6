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
from certain_grover.spectral import (
    certainty_power_probability,
    diagonalize,
    operator_power,
    power_trace_probabilities,
    reconstruction_residual,
)

EIG_TOL = 1e-13
POWER_TOL = 1e-11
CERTAINTY_TOL = 1e-10

CASES = [(2, 0.8), (5, 1.7), (64, math.pi), (1000, 2.9)]


def test_eigenvector_matrix_is_unitary():
    for n, phi in CASES:
        d = diagonalize(beta_angle(n), phi)
        assert np.abs(d.t @ d.t.conj().T - np.eye(2)).max() < EIG_TOL


def test_eigenvalues_lie_on_the_unit_circle():
    for n, phi in CASES:
        d = diagonalize(beta_angle(n), phi)
        assert np.abs(np.abs(d.lam) - 1.0).max() < EIG_TOL


def test_eigenvalue_phases():
    # Eigenvalues are -e^{i(phi +- 2 beta_prime)}.
    for n, phi in CASES:
        b = beta_angle(n)
        d = diagonalize(b, phi)
        bp = math.asin(math.sin(phi / 2) * math.sin(b))
        assert abs(d.beta_prime - bp) < EIG_TOL
        expected = [
            -complex(math.cos(phi + 2 * bp), math.sin(phi + 2 * bp)),
            -complex(math.cos(phi - 2 * bp), math.sin(phi - 2 * bp)),
        ]
        assert np.abs(np.array(expected) - d.lam).max() < 1e-12


def test_standard_phase_spectrum():
    # At phi = pi the minus sign cancels: -e^{i(pi +- 2 beta)} = e^{-+ 2i beta}.
    b = beta_angle(9)
    d = diagonalize(b, math.pi)
    expected = [
        complex(math.cos(2 * b), math.sin(2 * b)),
        complex(math.cos(2 * b), -math.sin(2 * b)),
    ]
    assert np.abs(np.sort_complex(d.lam) - np.sort_complex(np.array(expected))).max() < EIG_TOL


def test_phase_gap_equals_the_rotation_angle():
    # arg(lam1) - arg(lam2) = 4 beta_prime, the full turn per iteration.
    for n, phi in CASES:
        d = diagonalize(beta_angle(n), phi)
        gap = np.angle(d.lam[0] / d.lam[1])
        assert abs(abs(gap) - 4 * d.beta_prime) < 1e-12


def test_reconstruction_matches_the_direct_operator():
    for n, phi in CASES:
        assert reconstruction_residual(beta_angle(n), phi) < 1e-12
    assert reconstruction_residual(0.3, 1.0) < 1e-12


def test_eigenvectors_diagonalize_the_operator():
    for n, phi in CASES:
        b = beta_angle(n)
        d = diagonalize(b, phi)
        q = build_reduced_operator(b, phi).matrix
        off = d.t.conj().T @ q @ d.t
        assert abs(off[0, 1]) < 1e-12 and abs(off[1, 0]) < 1e-12
        assert np.abs(np.diag(off) - d.lam).max() < 1e-12


def test_operator_power_matches_repeated_multiplication():
    for n, phi in CASES:
        b = beta_angle(n)
        d = diagonalize(b, phi)
        q = build_reduced_operator(b, phi).matrix
        direct = np.eye(2, dtype=complex)
        for k in range(1, 8):
            direct = q @ direct
            assert np.abs(operator_power(d, k) - direct).max() < POWER_TOL


def test_operator_power_at_raw_angles():
    b, phi = 0.25, 2.0
    d = diagonalize(b, phi)
    q = build_reduced_operator(b, phi).matrix
    direct = np.linalg.matrix_power(q, 5)
    assert np.abs(operator_power(d, 5) - direct).max() < 1e-12


def test_operator_power_zero_is_identity():
    d = diagonalize(beta_angle(10), 1.0)
    assert np.abs(operator_power(d, 0) - np.eye(2)).max() < EIG_TOL


def test_operator_power_rejects_negative():
    d = diagonalize(beta_angle(10), 1.0)
    with pytest.raises(ValueError):
        operator_power(d, -1)


def test_power_probabilities_match_iteration():
    for n, phi in CASES:
        b = beta_angle(n)
        op = build_reduced_operator(b, phi)
        _, trace = iterate(initial_reduced_state(n), op, 30)
        closed = power_trace_probabilities(b, phi, 30)
        assert np.abs(np.array(closed) - np.array(trace.probabilities())).max() < POWER_TOL


def test_certainty_power_probability_reaches_one():
    for n in (2, 8, 100, 10**4):
        j = min_certainty_steps(n)
        phi = certainty_phase(n, j)
        p = certainty_power_probability(beta_angle(n), phi, j + 1)
        assert abs(p - 1.0) < CERTAINTY_TOL


def test_large_power_keeps_precision():
    # Accumulating the eigenphase as angle * n avoids the drift of repeated
    # matrix products; a million steps still gives a unitary power.
    b, phi = beta_angle(1000), 2.0
    q_n = operator_power(diagonalize(b, phi), 10**6)
    assert np.abs(q_n @ q_n.conj().T - np.eye(2)).max() < 1e-12
