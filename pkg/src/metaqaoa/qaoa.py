"""p-layer QAOA ansatz for a QUBO, its variational objective and readout."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .exceptions import ArgumentError
from .qubo import PartitionSolution, QuboModel, make_solution, qubo_value
from .statevector import (
    StateVector,
    apply_diagonal_phase,
    apply_rx,
    apply_rx_all,
    apply_rz,
    apply_rzz,
    expectation_diag,
    init_uniform,
    sample,
    z_signs,
)


@dataclass(frozen=True)
class QaoaParams:
    gammas: tuple[float, ...]
    betas: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "gammas", tuple(float(g) for g in self.gammas))
        object.__setattr__(self, "betas", tuple(float(b) for b in self.betas))
        if len(self.gammas) != len(self.betas):
            raise ArgumentError("gammas and betas must have the same length")

    @property
    def p(self) -> int:
        return len(self.gammas)

    def to_vector(self) -> np.ndarray:
        """Flat ``[gamma_1..gamma_p, beta_1..beta_p]`` vector."""
        return np.array(self.gammas + self.betas, dtype=float)

    @classmethod
    def from_vector(cls, x: Sequence[float]) -> "QaoaParams":
        x = [float(v) for v in x]
        if len(x) % 2:
            raise ArgumentError("parameter vector must have even length 2p")
        p = len(x) // 2
        return cls(tuple(x[:p]), tuple(x[p:]))

    @classmethod
    def zeros(cls, p: int) -> "QaoaParams":
        return cls((0.0,) * p, (0.0,) * p)

    @classmethod
    def random(cls, p: int, rng: np.random.Generator) -> "QaoaParams":
        """Uniform draw from ``(-pi, pi)`` for every angle."""
        x = rng.uniform(-math.pi, math.pi, size=2 * p)
        return cls.from_vector(x)


@dataclass
class QaoaOutcome:
    best: PartitionSolution
    params: QaoaParams
    objective_value: float
    evaluations: int
    samples_taken: int
    wall_time: float
    samples: list


def cost_layer_angles(
    model: QuboModel, gamma: float
) -> tuple[list[float], dict[tuple[int, int], float]]:
    """RZ angle per qubit and RZZ angle per pair for one cost layer.

    The RZ angle on qubit ``i`` is ``(c_i + sum_{j != i} Q_ij) * gamma / 2``
    and the RZZ angle on pair ``(i, j)`` is ``Q_ij * gamma / 4``.
    """
    row_sums = [0] * model.n
    for (i, j), q in model.quad.items():
        row_sums[i] += q
        row_sums[j] += q
    theta1 = [0.5 * (c + r) * gamma for c, r in zip(model.linear, row_sums)]
    theta2 = {pair: 0.25 * q * gamma for pair, q in sorted(model.quad.items())}
    return theta1, theta2


def mixer_angle(beta: float) -> float:
    return 2.0 * beta


def gates_per_layer(n: int) -> int:
    return n + n * (n - 1) // 2 + n


def run_ansatz(model: QuboModel, params: QaoaParams) -> StateVector:
    """Gate-by-gate circuit: uniform start, then RZ, RZZ, RX per layer."""
    state = init_uniform(model.n)
    for gamma, beta in zip(params.gammas, params.betas):
        theta1, theta2 = cost_layer_angles(model, gamma)
        for q, theta in enumerate(theta1):
            apply_rz(state, q, theta)
        for (i, j), theta in theta2.items():
            apply_rzz(state, i, j, theta)
        theta3 = mixer_angle(beta)
        for q in range(model.n):
            apply_rx(state, q, theta3)
    return state


class QaoaCircuit:
    """Precomputed fast evaluator for one model.

    All cost-layer gates are diagonal and their angles are linear in gamma,
    so a whole cost layer equals ``exp(-1j * gamma * generator)`` where
    ``generator`` is built once from the unit-gamma angles.  The result
    matches :func:`run_ansatz` to rounding error.
    """

    def __init__(self, model: QuboModel):
        self.model = model
        self.n = model.n
        self.energies = model.energies()
        theta1, theta2 = cost_layer_angles(model, 1.0)
        signs = [z_signs(self.n, q) for q in range(self.n)]
        gen = np.zeros(2**self.n)
        for q, t in enumerate(theta1):
            gen += 0.5 * t * signs[q]
        for (i, j), t in theta2.items():
            gen += 0.5 * t * signs[i] * signs[j]
        self.generator = gen
        self.evaluations = 0

    def state(self, params: QaoaParams) -> StateVector:
        state = init_uniform(self.n)
        for gamma, beta in zip(params.gammas, params.betas):
            apply_diagonal_phase(state, np.exp(-1j * gamma * self.generator))
            apply_rx_all(state, mixer_angle(beta))
        return state

    def expectation(self, params: QaoaParams) -> float:
        self.evaluations += 1
        return expectation_diag(self.state(params), self.energies)

    def __call__(self, x: Sequence[float]) -> float:
        return self.expectation(QaoaParams.from_vector(x))


def objective(
    model: QuboModel,
    params: QaoaParams,
    shots: Optional[int] = None,
    rng: Optional[np.random.Generator] = None,
) -> float:
    """Expected QUBO energy of the ansatz state.

    With ``shots`` set, returns the sample mean of ``shots`` measured
    energies instead (stochastic; not used by the benchmark).
    """
    circuit = QaoaCircuit(model)
    if shots is None:
        return circuit.expectation(params)
    draws = sample(circuit.state(params), shots, rng)
    return float(np.mean([qubo_value(model, z) for z in draws]))


def sample_count(n: int) -> int:
    """``floor(log10(2**n))`` readout shots, never fewer than one."""
    if n < 1:
        raise ArgumentError("n must be at least 1")
    # exact integer floor: largest k with 10**k <= 2**n
    return max(1, len(str(2**n)) - 1)


def finalize(
    model: QuboModel,
    params: QaoaParams,
    rng: np.random.Generator,
    evaluations: int = 0,
    started: Optional[float] = None,
    circuit: Optional[QaoaCircuit] = None,
) -> QaoaOutcome:
    """Sample the optimized circuit and keep the lowest-energy draw.

    ``started`` is a ``time.perf_counter()`` stamp; when given, the reported
    wall time covers everything since then (optimisation included).
    """
    if model.instance is None:
        raise ArgumentError("finalize needs a model built from an NppInstance")
    t0 = time.perf_counter() if started is None else started
    circuit = circuit or QaoaCircuit(model)
    state = circuit.state(params)
    value = expectation_diag(state, circuit.energies)
    s = sample_count(model.n)
    draws = sample(state, s, rng)
    best_bits = min(draws, key=lambda z: (qubo_value(model, z), z))
    best = make_solution(model.instance, best_bits)
    return QaoaOutcome(
        best=best,
        params=params,
        objective_value=value,
        evaluations=evaluations,
        samples_taken=s,
        wall_time=time.perf_counter() - t0,
        samples=draws,
    )
