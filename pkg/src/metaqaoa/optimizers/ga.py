"""Binary-coded genetic algorithm with roulette selection and one elite."""

from __future__ import annotations

from typing import Optional

import numpy as np

from ._base import (
    ObjectiveSpec,
    OptimizerConfig,
    OptimizerTrace,
    Tracker,
    initial_points,
    resolve_rng,
)


class BinaryCodec:
    """Maps ``bits_per_gene`` bits per dimension linearly onto ``[lo, hi]``."""

    def __init__(self, lower: np.ndarray, upper: np.ndarray, bits_per_gene: int):
        self.lower = lower
        self.upper = upper
        self.bits = bits_per_gene
        self.levels = 2**bits_per_gene - 1
        self.weights = 2 ** np.arange(bits_per_gene - 1, -1, -1, dtype=np.float64)

    @property
    def length(self) -> int:
        return self.bits * len(self.lower)

    def decode(self, chrom: np.ndarray) -> np.ndarray:
        genes = chrom.reshape(*chrom.shape[:-1], len(self.lower), self.bits)
        ints = genes @ self.weights
        return self.lower + (self.upper - self.lower) * ints / self.levels

    def encode(self, x: np.ndarray) -> np.ndarray:
        span = np.where(self.upper > self.lower, self.upper - self.lower, 1.0)
        ints = np.rint((x - self.lower) / span * self.levels).astype(np.int64)
        ints = np.clip(ints, 0, self.levels)
        shifts = np.arange(self.bits - 1, -1, -1)
        bits = (ints[..., None] >> shifts) & 1
        return bits.reshape(*x.shape[:-1], self.length).astype(np.uint8)


def roulette_fitness(costs: np.ndarray) -> np.ndarray:
    """``1 / (1 + cost)``; costs are shifted up first if any is negative."""
    shift = min(0.0, float(np.min(costs)))
    return 1.0 / (1.0 + (costs - shift))


def roulette_select(fitness: np.ndarray, count: int, rng: np.random.Generator) -> np.ndarray:
    total = float(np.sum(fitness))
    u = rng.random(count)
    if total <= 0 or not np.isfinite(total) or np.all(fitness == fitness[0]):
        return np.minimum((u * len(fitness)).astype(np.int64), len(fitness) - 1)
    cdf = np.cumsum(fitness) / total
    return np.minimum(np.searchsorted(cdf, u, side="right"), len(fitness) - 1)


def optimize_ga(
    obj: ObjectiveSpec,
    cfg: OptimizerConfig,
    rng: Optional[np.random.Generator] = None,
) -> OptimizerTrace:
    """Generational GA over binary chromosomes.

    Every generation breeds a full population of children (roulette parents,
    uniform crossover, per-bit mutation) and evaluates all of them. If no
    child beats the previous elite, the worst child is replaced by it.
    """
    cfg.validate()
    rng = resolve_rng(cfg, rng)
    track = Tracker(obj)
    codec = BinaryCodec(track.lower, track.upper, cfg.bits_per_gene)
    n, length = cfg.population, codec.length
    pm = 1.0 / length if cfg.mutation_rate is None else cfg.mutation_rate

    if cfg.initial_population is not None:
        pop = codec.encode(initial_points(cfg, track, rng))
    else:
        pop = rng.integers(0, 2, size=(n, length), dtype=np.uint8)
    costs = np.array([track(x) for x in codec.decode(pop)])
    track.record()

    for _ in range(cfg.iterations):
        elite = int(np.argmin(costs))
        elite_chrom, elite_cost = pop[elite].copy(), costs[elite]

        fitness = roulette_fitness(costs)
        parents = roulette_select(fitness, 2 * n, rng).reshape(n, 2)
        take_first = rng.random((n, length)) <= 0.5
        children = np.where(take_first, pop[parents[:, 0]], pop[parents[:, 1]])
        flips = rng.random((n, length)) < pm
        children = children ^ flips.astype(np.uint8)

        child_costs = np.array([track(x) for x in codec.decode(children)])
        if child_costs.min() > elite_cost:
            worst = int(np.argmax(child_costs))
            children[worst] = elite_chrom
            child_costs[worst] = elite_cost
        pop, costs = children, child_costs
        track.record()
    return track.trace
