"""Global-best particle swarm with velocity and position clamping."""

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


def optimize_pso(
    obj: ObjectiveSpec,
    cfg: OptimizerConfig,
    rng: Optional[np.random.Generator] = None,
    on_iteration=None,
) -> OptimizerTrace:
    """Minimise ``obj`` with a synchronous gbest swarm.

    ``on_iteration(evaluated_costs, pbest_costs, gbest_cost)`` lets tests
    check the dominance ordering after each swarm update.
    """
    cfg.validate()
    rng = resolve_rng(cfg, rng)
    track = Tracker(obj)
    span = track.upper - track.lower

    x = initial_points(cfg, track, rng)
    v = rng.uniform(-span, span, size=x.shape)
    costs = np.array([track(p) for p in x])
    pbest, pbest_cost = x.copy(), costs.copy()
    g = int(np.argmin(pbest_cost))
    gbest, gbest_cost = pbest[g].copy(), pbest_cost[g]
    track.record()
    if on_iteration is not None:
        on_iteration(costs.copy(), pbest_cost.copy(), gbest_cost)

    for _ in range(cfg.iterations):
        r1 = rng.random(x.shape)
        r2 = rng.random(x.shape)
        v = (
            cfg.inertia * v
            + cfg.cognitive * r1 * (pbest - x)
            + cfg.social * r2 * (gbest - x)
        )
        v = np.clip(v, -span, span)
        x = track.clip(x + v)
        costs = np.array([track(p) for p in x])

        better = costs <= pbest_cost
        pbest[better] = x[better]
        pbest_cost[better] = costs[better]
        g = int(np.argmin(pbest_cost))
        if pbest_cost[g] <= gbest_cost:
            gbest, gbest_cost = pbest[g].copy(), pbest_cost[g]
        track.record()
        if on_iteration is not None:
            on_iteration(costs.copy(), pbest_cost.copy(), gbest_cost)
    return track.trace
