"""Nelder-Mead simplex, the derivative-free baseline optimizer."""

from __future__ import annotations

from typing import Optional

import numpy as np

from ._base import ObjectiveSpec, OptimizerConfig, OptimizerTrace, Tracker, resolve_rng

REFLECT, EXPAND, CONTRACT, SHRINK = 1.0, 2.0, 0.5, 0.5
MIN_DIAMETER = 1e-8
INITIAL_STEP = 0.05


def _initial_simplex(x0: np.ndarray, lower: np.ndarray, upper: np.ndarray) -> np.ndarray:
    dim = len(x0)
    pts = np.tile(x0, (dim + 1, 1))
    for d in range(dim):
        step = INITIAL_STEP * (upper[d] - lower[d])
        pts[d + 1, d] += step if x0[d] + step <= upper[d] else -step
    return pts


def _diameter(pts: np.ndarray) -> float:
    return float(np.max(np.linalg.norm(pts[1:] - pts[0], axis=1), initial=0.0))


class _Budget(Exception):
    pass


def optimize_simplex(
    obj: ObjectiveSpec,
    cfg: OptimizerConfig,
    rng: Optional[np.random.Generator] = None,
) -> OptimizerTrace:
    """Minimise ``obj`` with at most ``population * iterations`` evaluations.

    Starts from ``cfg.initial_population[0]`` when given, otherwise from a
    uniform random point in the box.  The start is always evaluated, even
    with a zero budget.  Stops early once the simplex diameter falls below
    ``MIN_DIAMETER``.
    """
    cfg.validate()
    rng = resolve_rng(cfg, rng)
    budget = cfg.population * cfg.iterations
    track = Tracker(obj, budget=max(budget, 1))

    if cfg.initial_population is not None:
        x0 = track.clip(np.atleast_2d(cfg.initial_population)[0])
    else:
        x0 = track.uniform(rng, 1)[0]
    start_cost = track(x0)
    track.record()
    if budget == 0:
        return track.trace

    def f(x):
        if track.exhausted:
            raise _Budget
        return track(x)

    pts = track.clip(_initial_simplex(x0, track.lower, track.upper))
    vals = np.full(len(pts), np.inf)
    vals[0] = start_cost
    try:
        for i in range(1, len(pts)):
            vals[i] = f(pts[i])
        while True:
            order = np.argsort(vals, kind="stable")
            pts, vals = pts[order], vals[order]
            if _diameter(pts) < MIN_DIAMETER:
                break
            centroid = pts[:-1].mean(axis=0)
            worst, f_worst = pts[-1], vals[-1]

            xr = track.clip(centroid + REFLECT * (centroid - worst))
            fr = f(xr)
            if fr < vals[0]:
                xe = track.clip(centroid + EXPAND * (xr - centroid))
                fe = f(xe)
                pts[-1], vals[-1] = (xe, fe) if fe < fr else (xr, fr)
            elif fr < vals[-2]:
                pts[-1], vals[-1] = xr, fr
            else:
                if fr < f_worst:
                    xc = track.clip(centroid + CONTRACT * (xr - centroid))
                    fc = f(xc)
                    accept = fc <= fr
                else:
                    xc = track.clip(centroid + CONTRACT * (worst - centroid))
                    fc = f(xc)
                    accept = fc < f_worst
                if accept:
                    pts[-1], vals[-1] = xc, fc
                else:
                    for i in range(1, len(pts)):
                        pts[i] = track.clip(pts[0] + SHRINK * (pts[i] - pts[0]))
                        vals[i] = f(pts[i])
            track.record()
    except _Budget:
        track.record()
    return track.trace
