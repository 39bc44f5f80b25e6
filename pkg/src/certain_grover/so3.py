"""Geometric form of the search: states as unit vectors, iterations as rotations.

A normalized two-component state maps to a real unit 3-vector through the
Pauli expectation values. One search iteration then acts as a fixed-axis
spatial rotation, and the certainty condition reads off as plain geometry:
j+1 equal turns carry the start vector onto the north pole.
"""

import math
from dataclasses import dataclass

import numpy as np

from .core import (
    CERTAINTY_TOL,
    PhaseSchedule,
    ProbabilityTrace,
    ReducedState,
    SearchSpace,
    build_reduced_operator,
    initial_reduced_state,
)
from .errors import DegenerateAxisError

_PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)


@dataclass(frozen=True)
class Polarization:
    """Real 3-vector image of a state; unit length for normalized states."""

    x: float
    y: float
    z: float

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])

    @classmethod
    def from_array(cls, v: np.ndarray) -> "Polarization":
        return cls(float(v[0]), float(v[1]), float(v[2]))


@dataclass(frozen=True)
class RotationSpec:
    """Axis, per-iteration angle, pivot on the axis, and the total angle needed."""

    axis: np.ndarray
    alpha: float
    pivot: np.ndarray
    omega: float

    @classmethod
    def for_schedule(cls, beta: float, phi: float) -> "RotationSpec":
        return cls(
            axis=rotation_axis(beta, phi),
            alpha=rotation_angle(beta, phi),
            pivot=pivot_point(beta, phi),
            omega=total_angle_omega(beta, phi),
        )


@dataclass(frozen=True)
class RotationMatrix:
    """3x3 orthogonal matrix acting on polarization vectors."""

    matrix: np.ndarray


def polarization_of(state: ReducedState) -> Polarization:
    """Map amplitudes (a+ib, c+id) to (2(ac+bd), 2(ad-bc), a^2+b^2-c^2-d^2)."""
    a, b = state.amp1.real, state.amp1.imag
    c, d = state.amp2.real, state.amp2.imag
    return Polarization(
        x=2.0 * (a * c + b * d),
        y=2.0 * (a * d - b * c),
        z=a * a + b * b - c * c - d * d,
    )


def rotation_axis(beta: float, phi: float) -> np.ndarray:
    """Unit vector along (cos(phi/2), sin(phi/2), cos(phi/2)*tan(beta))."""
    if abs(beta - 0.5 * math.pi) < 1e-15:
        raise DegenerateAxisError(
            "tan(beta) diverges at beta = pi/2; the rotation axis is undefined"
        )
    h = 0.5 * phi
    raw = np.array([math.cos(h), math.sin(h), math.cos(h) * math.tan(beta)])
    return raw / np.linalg.norm(raw)


def rotation_angle(beta: float, phi: float) -> float:
    """Turn per iteration, alpha = 4*arcsin(sin(phi/2)*sin(beta))."""
    return 4.0 * math.asin(math.sin(0.5 * phi) * math.sin(beta))


def rotation_matrix(beta: float, phi: float) -> RotationMatrix:
    """The iteration as a rotation, built from the 2x2 operator.

    Entry (i, j) is Re(trace(sigma_i Q sigma_j Q^dagger))/2, which is the
    unique real 3x3 matrix satisfying R r(psi) = r(Q psi) for every state.
    Relative to the conventional right-handed rotation about the axis by
    +alpha this map is the transpose; see rodrigues_step for the matching
    step convention.
    """
    q = build_reduced_operator(beta, phi).matrix
    qd = q.conj().T
    r = np.empty((3, 3))
    for i in range(3):
        for j in range(3):
            r[i, j] = 0.5 * np.trace(_PAULI[i] @ q @ _PAULI[j] @ qd).real
    return RotationMatrix(matrix=r)


def pivot_point(beta: float, phi: float) -> np.ndarray:
    """Point where the rotation axis pierces the plane through the target.

    Closed form: with h = phi/2, t = tan(beta) and c = 1/(1 + cos^2(h) t^2),
    the point is c * (cos^2(h) t, sin(h) cos(h) t, cos^2(h) t^2). It lies on
    the axis line and satisfies (r_f - pivot) . axis = 0 for the north pole
    target r_f = (0, 0, 1).
    """
    if abs(beta - 0.5 * math.pi) < 1e-15:
        raise DegenerateAxisError(
            "tan(beta) diverges at beta = pi/2; the pivot is undefined"
        )
    h = 0.5 * phi
    t = math.tan(beta)
    ch = math.cos(h)
    c = 1.0 / (1.0 + ch * ch * t * t)
    return c * np.array([ch * ch * t, math.sin(h) * ch * t, ch * ch * t * t])


def total_angle_omega(beta: float, phi: float) -> float:
    """Total turn separating start from target about the axis.

    cos(omega) = -cos^2(beta) - cos(phi) sin^2(beta), which equals
    2x^2 - 1 for x = sin(phi/2) sin(beta).
    """
    c = -math.cos(beta) ** 2 - math.cos(phi) * math.sin(beta) ** 2
    return math.acos(max(-1.0, min(1.0, c)))


def rodrigues_step(r: Polarization, spec: RotationSpec, angle: float) -> Polarization:
    """Rotate a polarization vector about spec.axis by the given angle.

    r' = r cos(angle) + l (l . r)(1 - cos(angle)) + (r x l) sin(angle)

    The sine term uses r x l, not l x r. With this orientation a step by
    +alpha agrees with rotation_matrix(beta, phi) applied to r, and j+1
    steps of a certainty schedule land on the north pole.
    """
    l = spec.axis
    v = r.as_array()
    cos_a = math.cos(angle)
    sin_a = math.sin(angle)
    rotated = v * cos_a + l * np.dot(l, v) * (1.0 - cos_a) + np.cross(v, l) * sin_a
    return Polarization.from_array(rotated)


def so3_trace(n: int, j: int) -> ProbabilityTrace:
    """Certainty run in the rotation picture; probability per step is (z+1)/2."""
    space = SearchSpace.create(n)
    schedule = PhaseSchedule.certainty(space, j)
    spec = RotationSpec.for_schedule(space.beta, schedule.phi)
    r = polarization_of(initial_reduced_state(n))
    entries = []
    for k in range(1, j + 2):
        r = rodrigues_step(r, spec, spec.alpha)
        entries.append((k, 0.5 * (r.z + 1.0)))
    terminal = abs(entries[-1][1] - 1.0) <= CERTAINTY_TOL
    return ProbabilityTrace(entries, terminal)
