"""Dense state-vector simulator for the QAOA gate set.

Amplitude index ``k`` encodes the bitstring big-endian: qubit 0 is the most
significant bit.  Rotation conventions are ``exp(-i theta G / 2)`` for
``G`` in ``{Z, Z(x)Z, X}``.
"""

from __future__ import annotations

import math
from typing import Optional

import numpy as np

from .exceptions import ArgumentError, CapabilityError

MAX_QUBITS = 20


class StateVector:
    """Single-owner mutable ``n``-qubit pure state.

    ``gate_count`` is incremented by every gate application so callers can
    verify circuit structure.
    """

    def __init__(self, amps: np.ndarray):
        amps = np.asarray(amps, dtype=np.complex128)
        n = int(round(math.log2(amps.size))) if amps.size else 0
        if amps.ndim != 1 or amps.size != 2**n or n < 1:
            raise ArgumentError("amplitude vector length must be a power of two >= 2")
        if n > MAX_QUBITS:
            raise CapabilityError(f"at most {MAX_QUBITS} qubits are supported")
        self.n = n
        self.amps = amps.copy()
        self.gate_count = 0

    @classmethod
    def basis(cls, bitstring) -> "StateVector":
        bits = [int(b) for b in bitstring]
        amps = np.zeros(2 ** len(bits), dtype=np.complex128)
        index = 0
        for b in bits:
            index = (index << 1) | b
        amps[index] = 1.0
        return cls(amps)

    def copy(self) -> "StateVector":
        out = StateVector(self.amps)
        out.gate_count = self.gate_count
        return out

    def norm(self) -> float:
        return float(np.vdot(self.amps, self.amps).real)

    def probabilities(self) -> np.ndarray:
        return self.amps.real**2 + self.amps.imag**2

    def _check_qubit(self, q: int) -> None:
        if not 0 <= q < self.n:
            raise ArgumentError(f"qubit index {q} out of range for {self.n} qubits")

    def _split(self, q: int) -> np.ndarray:
        # view with axis 1 selecting the value of bit q
        return self.amps.reshape(2**q, 2, 2 ** (self.n - q - 1))

    def __repr__(self):
        return f"StateVector(n={self.n})"


def init_uniform(n: int) -> StateVector:
    if not 1 <= n <= MAX_QUBITS:
        raise CapabilityError(f"qubit count must be in [1, {MAX_QUBITS}], got {n}")
    return StateVector(np.full(2**n, 2.0 ** (-n / 2), dtype=np.complex128))


def z_signs(n: int, q: int) -> np.ndarray:
    """+1 where bit ``q`` is 0, -1 where it is 1 (length ``2**n``)."""
    bit = (np.arange(2**n) >> (n - 1 - q)) & 1
    return 1 - 2 * bit


def apply_rz(state: StateVector, q: int, theta: float) -> StateVector:
    state._check_qubit(q)
    view = state._split(q)
    view[:, 0, :] *= complex(math.cos(theta / 2), -math.sin(theta / 2))
    view[:, 1, :] *= complex(math.cos(theta / 2), math.sin(theta / 2))
    state.gate_count += 1
    return state


def apply_rzz(state: StateVector, q1: int, q2: int, theta: float) -> StateVector:
    state._check_qubit(q1)
    state._check_qubit(q2)
    if q1 == q2:
        raise ArgumentError("RZZ needs two distinct qubits")
    lo, hi = sorted((q1, q2))
    n = state.n
    view = state.amps.reshape(2**lo, 2, 2 ** (hi - lo - 1), 2, 2 ** (n - hi - 1))
    same = complex(math.cos(theta / 2), -math.sin(theta / 2))
    differ = same.conjugate()
    view[:, 0, :, 0, :] *= same
    view[:, 1, :, 1, :] *= same
    view[:, 0, :, 1, :] *= differ
    view[:, 1, :, 0, :] *= differ
    state.gate_count += 1
    return state


def apply_rx(state: StateVector, q: int, theta: float) -> StateVector:
    state._check_qubit(q)
    view = state._split(q)
    c = math.cos(theta / 2)
    s = complex(0.0, -math.sin(theta / 2))
    zero = view[:, 0, :].copy()
    one = view[:, 1, :]
    view[:, 0, :] = c * zero + s * one
    view[:, 1, :] = s * zero + c * one
    state.gate_count += 1
    return state


def apply_rx_all(state: StateVector, theta: float) -> StateVector:
    for q in range(state.n):
        apply_rx(state, q, theta)
    return state


def apply_diagonal_phase(state: StateVector, phases: np.ndarray) -> StateVector:
    """Multiply by a precomputed unit-modulus diagonal (not counted as a gate)."""
    state.amps *= phases
    return state


def expectation_diag(state: StateVector, energies) -> float:
    """``sum_k |amps[k]|**2 * energies[k]`` with a fixed reduction order."""
    energies = np.asarray(energies, dtype=float)
    if energies.shape != (state.amps.size,):
        raise ArgumentError(
            f"energies has shape {energies.shape}, expected ({state.amps.size},)"
        )
    return float(np.dot(state.probabilities(), energies))


def sample(
    state: StateVector, shots: int, rng: Optional[np.random.Generator] = None
) -> list[tuple[int, ...]]:
    """Draw ``shots`` bitstrings from the Born distribution (inverse CDF)."""
    if shots < 1:
        raise ArgumentError("shots must be at least 1")
    rng = np.random.default_rng() if rng is None else rng
    cdf = np.cumsum(state.probabilities())
    cdf /= cdf[-1]
    idx = np.searchsorted(cdf, rng.random(shots), side="right")
    idx = np.minimum(idx, cdf.size - 1)
    n = state.n
    return [tuple((int(k) >> (n - 1 - q)) & 1 for q in range(n)) for k in idx]
