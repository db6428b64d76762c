"""Classical reference solvers: simulated annealing and exact optimum.

Rows produced by :func:`simulated_anneal` are labelled ``sa-baseline``.
It is a classical stand-in and does not model a quantum annealer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .exceptions import ArgumentError, CapabilityError
from .qubo import (
    DP_MAX_TOTAL,
    NppInstance,
    PartitionSolution,
    QuboModel,
    brute_force_best,
    dp_best_solution,
    make_solution,
)

SA_LABEL = "sa-baseline"
# exact_best enumerates up to this size and switches to the DP table above it
EXACT_ENUMERATION_MAX_N = 12
SWEEP_BLOCK = 64


@dataclass
class AnnealConfig:
    reads: int = 1000
    sweeps: int = 1000
    t_hi: Optional[float] = None  # None: 10 x largest possible single-flip delta
    t_lo: float = 0.1
    seed: int = 0

    def validate(self) -> "AnnealConfig":
        if self.reads < 1:
            raise ArgumentError("reads must be at least 1")
        if self.sweeps < 0:
            raise ArgumentError("sweeps must be non-negative")
        if self.t_lo <= 0:
            raise ArgumentError("t_lo must be positive")
        if self.t_hi is not None and not self.t_hi > self.t_lo:
            raise ArgumentError("t_hi must exceed t_lo")
        return self


def max_flip_delta(model: QuboModel) -> float:
    """Upper bound on ``|dE|`` of a single bit flip, from coefficient sizes."""
    bound = np.abs(np.asarray(model.linear, dtype=float))
    bound = bound + np.abs(model.coupling_matrix()).sum(axis=1)
    return float(bound.max())


def temperature_schedule(model: QuboModel, cfg: AnnealConfig) -> np.ndarray:
    """Geometric cooling from ``t_hi`` to ``t_lo``, one temperature per sweep."""
    t_hi = cfg.t_hi if cfg.t_hi is not None else 10.0 * max_flip_delta(model)
    t_hi = max(t_hi, cfg.t_lo * (1 + 1e-12))
    if cfg.sweeps <= 1:
        return np.full(cfg.sweeps, t_hi)
    return t_hi * (cfg.t_lo / t_hi) ** (np.arange(cfg.sweeps) / (cfg.sweeps - 1))


def _read_streams(seed: int, read: int):
    # three independent double streams per read: start, site choice, acceptance
    children = np.random.SeedSequence([seed, read]).spawn(3)
    return [np.random.default_rng(c) for c in children]


def anneal_reads(
    model: QuboModel,
    cfg: AnnealConfig,
    visits: Optional[np.ndarray] = None,
) -> tuple[np.ndarray, np.ndarray]:
    """Run every read, vectorised across reads.

    A sweep is ``n`` Metropolis proposals, each flipping one uniformly random
    bit.  Read ``r`` draws all of its randomness from streams seeded by
    ``(cfg.seed, r)``, so results do not depend on how reads are batched.

    Returns the per-read best bitstrings ``(reads, n)`` and energies.  If
    ``visits`` (length ``2**n``) is given, the state after every proposal is
    tallied into it.
    """
    cfg.validate()
    n, reads = model.n, cfg.reads
    temps = temperature_schedule(model, cfg)
    coupling = model.coupling_matrix()
    linear = np.asarray(model.linear, dtype=float)
    streams = [_read_streams(cfg.seed, r) for r in range(reads)]

    z = np.stack([s[0].random(n) < 0.5 for s in streams]).astype(np.int64)
    field = linear + z @ coupling
    upper = np.triu(coupling, 1)
    e = model.constant + z @ linear + np.einsum("ri,ij,rj->r", z, upper, z)
    best_z, best_e = z.copy(), e.copy()
    ridx = np.arange(reads)
    weights = 1 << np.arange(n - 1, -1, -1)

    for start in range(0, cfg.sweeps, SWEEP_BLOCK):
        block = temps[start : start + SWEEP_BLOCK]
        steps = len(block) * n
        sites = np.stack([s[1].random(steps) for s in streams])
        sites = np.minimum((sites * n).astype(np.int64), n - 1)
        accept_u = np.stack([s[2].random(steps) for s in streams])
        for t in range(steps):
            temp = block[t // n]
            i = sites[:, t]
            sign = 1 - 2 * z[ridx, i]
            de = sign * field[ridx, i]
            accept = (de <= 0) | (accept_u[:, t] < np.exp(-np.maximum(de, 0.0) / temp))
            delta = np.where(accept, sign, 0)
            z[ridx, i] += delta
            field += delta[:, None] * coupling[i]
            e = e + np.where(accept, de, 0.0)
            improved = e < best_e
            if improved.any():
                best_e = np.where(improved, e, best_e)
                best_z[improved] = z[improved]
            if visits is not None:
                np.add.at(visits, z @ weights, 1)
    return best_z, np.rint(best_e).astype(np.int64)


def simulated_anneal(
    model: QuboModel, cfg: Optional[AnnealConfig] = None
) -> PartitionSolution:
    """Best solution over all reads; ties go to the smallest bitstring."""
    if model.instance is None:
        raise ArgumentError("simulated_anneal needs a model built from an NppInstance")
    cfg = cfg or AnnealConfig()
    bits, energies = anneal_reads(model, cfg)
    low = energies.min()
    candidates = sorted(tuple(int(b) for b in row) for row in bits[energies == low])
    return make_solution(model.instance, candidates[0])


def exact_best(instance: NppInstance) -> PartitionSolution:
    """Provably optimal partition by enumeration or, for larger n, DP."""
    if instance.n <= EXACT_ENUMERATION_MAX_N:
        return brute_force_best(instance)
    if instance.total <= DP_MAX_TOTAL:
        return dp_best_solution(instance)
    raise CapabilityError(
        f"n={instance.n} exceeds enumeration bound {EXACT_ENUMERATION_MAX_N} "
        f"and total {instance.total} exceeds DP bound {DP_MAX_TOTAL}"
    )
