"""Ant colony search over a per-dimension bin discretisation.

Each dimension is cut into ``bins`` equal cells whose centres are the only
values an ant can pick.  Pheromone lives on (dimension, bin) pairs.  The
heuristic desirability of a bin is ``1 / (1 + best cost seen with it)``;
bins nobody has tried yet get the average desirability of the tried ones.
"""

from __future__ import annotations

from typing import Optional

import numpy as np

from ..exceptions import CapabilityError
from ._base import ObjectiveSpec, OptimizerConfig, OptimizerTrace, Tracker, resolve_rng

MAX_TABLE_CELLS = 10**7
# lower pheromone limit relative to tau0, keeps every bin reachable when rho = 1
TAU_FLOOR = 1e-9


def bin_centers(lower: np.ndarray, upper: np.ndarray, bins: int) -> np.ndarray:
    """``(D, bins)`` centres of equal-width cells spanning each interval."""
    frac = (np.arange(bins) + 0.5) / bins
    return lower[:, None] + (upper - lower)[:, None] * frac[None, :]


def desirability(best_with_bin: np.ndarray, shift: float = 0.0) -> np.ndarray:
    """``1 / (1 + best cost)`` per bin; untried bins get the mean of tried ones."""
    tried = np.isfinite(best_with_bin)
    if not tried.any():
        return np.ones_like(best_with_bin)
    eta = np.where(tried, 1.0 / (1.0 + np.where(tried, best_with_bin, 0.0) - shift), 0.0)
    return np.where(tried, eta, eta[tried].mean())


def choice_probabilities(
    tau: np.ndarray, eta: np.ndarray, alpha: float, beta: float
) -> np.ndarray:
    weights = tau**alpha * eta**beta
    totals = weights.sum(axis=1, keepdims=True)
    flat = ~(np.isfinite(totals) & (totals > 0))
    weights = np.where(flat, 1.0, weights)
    return weights / weights.sum(axis=1, keepdims=True)


def optimize_aco(
    obj: ObjectiveSpec,
    cfg: OptimizerConfig,
    rng: Optional[np.random.Generator] = None,
    on_iteration=None,
) -> OptimizerTrace:
    """Minimise ``obj`` with ``iterations + 1`` rounds of ``population`` ants.

    Round 0 is the seeding round (uniform pheromone, all bins untried).
    Pheromone evaporates by ``rho`` after each round and every ant deposits
    ``1 / (1 + cost)`` on the bins it chose; pheromone never drops below
    ``tau0 * TAU_FLOOR``.  ``on_iteration(probabilities,
    tau)`` is called with the table each round sampled from and the
    pheromone after the update.
    """
    cfg.validate()
    dim, k = obj.dimension, cfg.bins
    if dim * k > MAX_TABLE_CELLS:
        raise CapabilityError(f"pheromone table of {dim * k} cells exceeds {MAX_TABLE_CELLS}")
    rng = resolve_rng(cfg, rng)
    track = Tracker(obj)
    centers = bin_centers(track.lower, track.upper, k)
    tau = np.full((dim, k), cfg.tau0)
    best_with_bin = np.full((dim, k), np.inf)
    rows = np.arange(dim)

    for _ in range(cfg.iterations + 1):
        eta = desirability(best_with_bin, min(0.0, track.trace.best_cost))
        probs = choice_probabilities(tau, eta, cfg.alpha, cfg.beta)
        cdf = np.cumsum(probs, axis=1)
        u = rng.random((cfg.population, dim))
        picks = np.empty((cfg.population, dim), dtype=np.int64)
        for d in range(dim):
            picks[:, d] = np.searchsorted(cdf[d] / cdf[d, -1], u[:, d], side="right")
        picks = np.minimum(picks, k - 1)

        costs = np.array([track(centers[rows, p]) for p in picks])

        shift = min(0.0, track.trace.best_cost)
        deposit = 1.0 / (1.0 + costs - shift)
        tau *= 1.0 - cfg.rho
        for p, amount, cost in zip(picks, deposit, costs):
            tau[rows, p] += amount
            best_with_bin[rows, p] = np.minimum(best_with_bin[rows, p], cost)
        np.maximum(tau, cfg.tau0 * TAU_FLOOR, out=tau)
        track.record()
        if on_iteration is not None:
            on_iteration(probs.copy(), tau.copy())
    return track.trace
