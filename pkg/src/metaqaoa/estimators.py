"""Scikit-learn style partitioners.

Each value of ``X`` is treated as one sample and the fitted ``labels_`` give
the side (0 or 1) it lands on, so ``fit_predict`` works the same way as for
a clustering estimator::

    >>> ExactPartitioner().fit_predict([4, 5, 6, 7, 8])
    array([0, 0, 0, 1, 1])
"""

from __future__ import annotations

import time

import numpy as np
from sklearn.base import BaseEstimator, ClusterMixin
from sklearn.utils.validation import check_is_fitted

from ._validation import check_values, resolve_seed
from .baselines import AnnealConfig, exact_best, simulated_anneal
from .exceptions import ArgumentError
from .optimizers import OPTIMIZERS, ObjectiveSpec, OptimizerConfig
from .qaoa import QaoaCircuit, QaoaParams, finalize
from .qubo import NppInstance, build_qubo


class _PartitionerMixin(ClusterMixin):
    def _store(self, instance, solution):
        self.instance_ = instance
        self.solution_ = solution
        self.labels_ = np.asarray(solution.bitstring, dtype=np.int64)
        self.ratio_ = float(solution.ratio)
        self.difference_ = solution.d
        return self

    def score(self, X=None, y=None):
        """Negative ``R - 1`` of the fitted partition (higher is better)."""
        check_is_fitted(self, "solution_")
        return -float(self.solution_.ratio - 1)


class QaoaPartitioner(_PartitionerMixin, BaseEstimator):
    """QAOA circuit whose angles are tuned by one of the black-box optimizers.

    Parameters
    ----------
    optimizer : {"baseline", "ga", "de", "pso", "aco"}
    layers : int
        Number of cost/mixer layers ``p``.
    population, iterations : int
        Optimizer budget; the baseline gets ``population * iterations``
        evaluations.
    random_state : int, RandomState or None
    """

    def __init__(self, optimizer="aco", layers=2, population=10, iterations=50,
                 random_state=None):
        self.optimizer = optimizer
        self.layers = layers
        self.population = population
        self.iterations = iterations
        self.random_state = random_state

    def fit(self, X, y=None):
        if self.optimizer not in OPTIMIZERS:
            raise ArgumentError(
                f"optimizer must be one of {sorted(OPTIMIZERS)}, got {self.optimizer!r}"
            )
        if self.layers < 1:
            raise ArgumentError("layers must be at least 1")
        seed = resolve_seed(self.random_state)
        instance = NppInstance(check_values(X))
        model = build_qubo(instance)
        circuit = QaoaCircuit(model)
        rng = np.random.default_rng(seed)
        cfg = OptimizerConfig(
            population=self.population, iterations=self.iterations, seed=seed
        )
        started = time.perf_counter()
        trace = OPTIMIZERS[self.optimizer](ObjectiveSpec(2 * self.layers, circuit), cfg, rng)
        params = QaoaParams.from_vector(trace.best_x)
        outcome = finalize(model, params, rng, trace.evaluations, started, circuit)

        self.trace_ = trace
        self.params_ = params
        self.outcome_ = outcome
        self.n_evaluations_ = trace.evaluations
        return self._store(instance, outcome.best)


class AnnealingPartitioner(_PartitionerMixin, BaseEstimator):
    """Best-of-reads simulated annealing over the QUBO bitstrings."""

    def __init__(self, reads=1000, sweeps=1000, t_hi=None, t_lo=0.1, random_state=None):
        self.reads = reads
        self.sweeps = sweeps
        self.t_hi = t_hi
        self.t_lo = t_lo
        self.random_state = random_state

    def fit(self, X, y=None):
        instance = NppInstance(check_values(X))
        cfg = AnnealConfig(
            self.reads, self.sweeps, self.t_hi, self.t_lo, resolve_seed(self.random_state)
        )
        return self._store(instance, simulated_anneal(build_qubo(instance), cfg))


class ExactPartitioner(_PartitionerMixin, BaseEstimator):
    """Optimal partition by enumeration (small n) or dynamic programming."""

    def fit(self, X, y=None):
        instance = NppInstance(check_values(X))
        return self._store(instance, exact_best(instance))
