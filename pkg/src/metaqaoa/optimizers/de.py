"""Differential evolution, rand/1/bin with greedy minimising selection."""

from __future__ import annotations

from typing import Optional

import numpy as np

from ..exceptions import ArgumentError
from ._base import (
    ObjectiveSpec,
    OptimizerConfig,
    OptimizerTrace,
    Tracker,
    initial_points,
    resolve_rng,
)


def _mutants(pop: np.ndarray, F: float, rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
    n = len(pop)
    partners = np.empty((n, 3), dtype=np.int64)
    for i in range(n):
        others = np.delete(np.arange(n), i)
        partners[i] = rng.choice(others, size=3, replace=False)
    r1, r2, r3 = partners.T
    return pop[r1] + F * (pop[r2] - pop[r3]), partners


def binomial_crossover(
    target: np.ndarray, mutant: np.ndarray, CR: float, rng: np.random.Generator
) -> np.ndarray:
    """Take mutant components with probability CR, plus one forced index per row."""
    n, dim = target.shape
    mask = rng.random((n, dim)) <= CR
    forced = rng.integers(dim, size=n)
    mask[np.arange(n), forced] = True
    return np.where(mask, mutant, target)


def optimize_de(
    obj: ObjectiveSpec,
    cfg: OptimizerConfig,
    rng: Optional[np.random.Generator] = None,
    on_generation=None,
) -> OptimizerTrace:
    """Minimise ``obj`` with synchronous DE.

    Each generation builds every trial vector from the current population
    before any of them is evaluated. A trial replaces its target when its
    cost is less than or equal to the target's.

    ``on_generation(population, costs)`` is called after initialisation and
    after every selection step.
    """
    cfg.validate()
    if cfg.population < 4:
        raise ArgumentError("differential evolution needs a population of at least 4")
    rng = resolve_rng(cfg, rng)
    track = Tracker(obj)

    pop = initial_points(cfg, track, rng)
    costs = np.array([track(x) for x in pop])
    track.record()
    if on_generation is not None:
        on_generation(pop.copy(), costs.copy())

    for _ in range(cfg.iterations):
        mutant, _ = _mutants(pop, cfg.F, rng)
        trial = track.clip(binomial_crossover(pop, track.clip(mutant), cfg.CR, rng))
        trial_costs = np.array([track(x) for x in trial])
        keep = trial_costs <= costs
        pop[keep] = trial[keep]
        costs[keep] = trial_costs[keep]
        track.record()
        if on_generation is not None:
            on_generation(pop.copy(), costs.copy())
    return track.trace
