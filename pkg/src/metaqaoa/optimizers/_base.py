"""Black-box minimisation contract shared by every optimizer."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from ..exceptions import ArgumentError


@dataclass
class ObjectiveSpec:
    """A deterministic cost over a ``dimension``-dimensional box."""

    dimension: int
    evaluate: Callable[[np.ndarray], float]
    bounds: Optional[Sequence[tuple[float, float]]] = None

    def __post_init__(self):
        if self.dimension < 1:
            raise ArgumentError("dimension must be at least 1")
        if self.bounds is None:
            self.bounds = [(-math.pi, math.pi)] * self.dimension
        self.bounds = [(float(lo), float(hi)) for lo, hi in self.bounds]
        if len(self.bounds) != self.dimension:
            raise ArgumentError("need one (lo, hi) pair per dimension")
        if any(lo > hi for lo, hi in self.bounds):
            raise ArgumentError("every bound needs lo <= hi")

    @property
    def lower(self) -> np.ndarray:
        return np.array([b[0] for b in self.bounds])

    @property
    def upper(self) -> np.ndarray:
        return np.array([b[1] for b in self.bounds])


@dataclass
class OptimizerConfig:
    population: int = 10
    iterations: int = 50
    seed: int = 0
    # differential evolution
    F: float = 0.8
    CR: float = 0.9
    # genetic algorithm; mutation_rate None means 1 / chromosome length
    bits_per_gene: int = 16
    mutation_rate: Optional[float] = None
    # particle swarm (constriction coefficients)
    inertia: float = 0.729
    cognitive: float = 1.49445
    social: float = 1.49445
    # ant colony
    alpha: float = 1.0
    beta: float = 2.0
    rho: float = 0.1
    tau0: float = 1.0
    bins: int = 32
    # optional starting points, shape (population, dimension); the simplex
    # baseline uses row 0 as its start
    initial_population: Optional[np.ndarray] = None

    def validate(self) -> "OptimizerConfig":
        if self.population < 1:
            raise ArgumentError("population must be at least 1")
        if self.iterations < 0:
            raise ArgumentError("iterations must be non-negative")
        if not 0 <= self.F < 2:
            raise ArgumentError("F must lie in [0, 2)")
        if not 0 <= self.CR <= 1:
            raise ArgumentError("CR must lie in [0, 1]")
        if self.bits_per_gene < 1:
            raise ArgumentError("bits_per_gene must be at least 1")
        if self.mutation_rate is not None and not 0 <= self.mutation_rate <= 1:
            raise ArgumentError("mutation_rate must lie in [0, 1]")
        if min(self.inertia, self.cognitive, self.social) < 0:
            raise ArgumentError("PSO coefficients must be non-negative")
        if self.alpha < 0 or self.beta < 0:
            raise ArgumentError("ACO exponents must be non-negative")
        if not 0 < self.rho <= 1:
            raise ArgumentError("rho must lie in (0, 1]")
        if self.tau0 <= 0:
            raise ArgumentError("tau0 must be positive")
        if self.bins < 1:
            raise ArgumentError("bins must be at least 1")
        return self


@dataclass
class OptimizerTrace:
    """Best-so-far cost after initialisation and after every iteration."""

    best_so_far: list[float] = field(default_factory=list)
    evaluations: int = 0
    best_x: Optional[np.ndarray] = None
    best_cost: float = math.inf


class Tracker:
    """Counts evaluations, clamps points into the box and keeps the incumbent."""

    def __init__(self, obj: ObjectiveSpec, budget: Optional[int] = None):
        self.obj = obj
        self.lower = obj.lower
        self.upper = obj.upper
        self.budget = budget
        self.trace = OptimizerTrace()

    @property
    def exhausted(self) -> bool:
        return self.budget is not None and self.trace.evaluations >= self.budget

    def clip(self, x) -> np.ndarray:
        return np.clip(np.asarray(x, dtype=float), self.lower, self.upper)

    def __call__(self, x) -> float:
        x = self.clip(x)
        cost = float(self.obj.evaluate(x.copy()))
        self.trace.evaluations += 1
        if cost < self.trace.best_cost:
            self.trace.best_cost = cost
            self.trace.best_x = x.copy()
        return cost

    def record(self) -> None:
        self.trace.best_so_far.append(self.trace.best_cost)

    def uniform(self, rng: np.random.Generator, size: int) -> np.ndarray:
        return rng.uniform(self.lower, self.upper, size=(size, self.obj.dimension))


def resolve_rng(cfg: OptimizerConfig, rng: Optional[np.random.Generator]) -> np.random.Generator:
    return np.random.default_rng(cfg.seed) if rng is None else rng


def initial_points(
    cfg: OptimizerConfig, tracker: Tracker, rng: np.random.Generator
) -> np.ndarray:
    if cfg.initial_population is not None:
        pts = np.atleast_2d(np.asarray(cfg.initial_population, dtype=float))
        if pts.shape != (cfg.population, tracker.obj.dimension):
            raise ArgumentError(
                f"initial_population must have shape "
                f"({cfg.population}, {tracker.obj.dimension}), got {pts.shape}"
            )
        return tracker.clip(pts)
    return tracker.uniform(rng, cfg.population)
