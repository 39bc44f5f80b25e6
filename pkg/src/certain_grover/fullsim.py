"""Brute-force state-vector simulator over all n amplitudes.

Ground truth for the reduced picture: the selective phase on the marked
index followed by the reflection-like operator about the uniform state,
applied to the whole vector with no basis change or 2x2 shortcut. The
diffusion is evaluated in closed form (each amplitude mixes with the mean),
which works for any n, not only powers of two. A Hadamard-conjugated variant
exists for power-of-two sizes as an independent cross-check.
"""

import math
from dataclasses import dataclass

import numpy as np

from .core import CERTAINTY_TOL, ProbabilityTrace, ReducedState
from .errors import ReductionError

# Default cap on the dense representation, 2^22 amplitudes (~64 MiB complex).
MAX_FULL_N = 1 << 22

# Unmarked amplitudes must agree within this tolerance for the 2D reduction
# to be meaningful.
REDUCTION_TOL = 1e-9


@dataclass(frozen=True)
class FullState:
    """Length-n complex amplitude vector."""

    amplitudes: np.ndarray

    @property
    def n(self) -> int:
        return len(self.amplitudes)

    def norm_squared(self) -> float:
        return float(np.sum(np.abs(self.amplitudes) ** 2))


def uniform_state(n: int, max_n: int = MAX_FULL_N) -> FullState:
    """All n amplitudes equal to 1/sqrt(n)."""
    if n < 1:
        raise ValueError(f"item count must be at least 1, got {n}")
    if n > max_n:
        raise ValueError(
            f"n={n} exceeds the dense-simulation cap {max_n}; use the reduced form"
        )
    return FullState(np.full(n, 1.0 / math.sqrt(n), dtype=complex))


def apply_marked_phase(state: FullState, tau: int, phi: float) -> FullState:
    """Multiply the marked amplitude by e^{i phi}, leave the rest alone."""
    if not 0 <= tau < state.n:
        raise ValueError(f"marked index {tau} outside [0, {state.n})")
    amps = state.amplitudes.copy()
    amps[tau] *= complex(math.cos(phi), math.sin(phi))
    return FullState(amps)


def apply_diffusion(state: FullState, phi: float) -> FullState:
    """Phase-rotated reflection about the uniform state, with overall sign.

    Each amplitude maps to -(a_k + (e^{i phi} - 1) * mean). At phi = pi the
    overall sign folds into the reflection and the map becomes the familiar
    inversion about the average, 2 * mean - a_k."""
    u = complex(math.cos(phi), math.sin(phi))
    amps = state.amplitudes
    return FullState(-(amps + (u - 1.0) * amps.mean()))


def apply_diffusion_hadamard(state: FullState, phi: float) -> FullState:
    """Same operator via Hadamard conjugation; n must be a power of two.

    Transforms to the Walsh basis, rotates component 0 by e^{i phi}, negates,
    and transforms back. Exists only to cross-check apply_diffusion."""
    n = state.n
    if n & (n - 1):
        raise ValueError(f"Hadamard path needs a power-of-two size, got {n}")
    v = _walsh_hadamard(state.amplitudes)
    v[0] *= complex(math.cos(phi), math.sin(phi))
    return FullState(-_walsh_hadamard(v))


def _walsh_hadamard(amps: np.ndarray) -> np.ndarray:
    v = amps.copy()
    n = len(v)
    h = 1
    while h < n:
        v = v.reshape(-1, 2, h)
        top = v[:, 0, :] + v[:, 1, :]
        bottom = v[:, 0, :] - v[:, 1, :]
        v = np.stack((top, bottom), axis=1).reshape(n)
        h *= 2
    return v / math.sqrt(n)


def full_iterate(
    state: FullState, tau: int, phi: float, steps: int
) -> tuple:
    """Marked phase then diffusion, `steps` times, recording |amp_tau|^2 each time."""
    if steps < 0:
        raise ValueError(f"steps must be nonnegative, got {steps}")
    current = state
    entries = []
    for k in range(1, steps + 1):
        current = apply_diffusion(apply_marked_phase(current, tau, phi), phi)
        entries.append((k, float(abs(current.amplitudes[tau]) ** 2)))
    terminal = bool(entries) and abs(entries[-1][1] - 1.0) <= CERTAINTY_TOL
    return current, ProbabilityTrace(entries, terminal)


def reduce(state: FullState, tau: int) -> ReducedState:
    """Project onto the plane of the marked item and the uniform rest.

    Valid only while all unmarked amplitudes agree; a spread beyond
    REDUCTION_TOL means the state left that plane and raises ReductionError.
    """
    if not 0 <= tau < state.n:
        raise ValueError(f"marked index {tau} outside [0, {state.n})")
    amps = state.amplitudes
    if state.n == 1:
        return ReducedState(amp1=complex(amps[0]), amp2=0j)
    rest = np.delete(amps, tau)
    spread = float(np.abs(rest - rest[0]).max())
    if spread > REDUCTION_TOL:
        raise ReductionError(
            f"unmarked amplitudes differ by {spread:.3e}; "
            "the state is outside the two-dimensional plane"
        )
    common = complex(rest.mean())
    return ReducedState(amp1=complex(amps[tau]), amp2=math.sqrt(state.n - 1) * common)
