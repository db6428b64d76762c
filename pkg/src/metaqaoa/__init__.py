"""Metaheuristic-tuned QAOA for number partitioning, with classical baselines."""

from .baselines import AnnealConfig, exact_best, simulated_anneal
from .bench import BenchPlan, BenchRecord, run_benchmark, summarize
from .estimators import AnnealingPartitioner, ExactPartitioner, QaoaPartitioner
from .exceptions import ArgumentError, CapabilityError, CoefficientOverflowError
from .qaoa import QaoaParams, finalize, objective, run_ansatz, sample_count
from .qubo import (
    NppInstance,
    PartitionSolution,
    QuboModel,
    brute_force_best,
    build_qubo,
    dp_best_diff,
    energy,
    generate_instance,
    quality_ratio,
    qubo_value,
)

__version__ = "0.1.0"

__all__ = [
    "AnnealConfig",
    "AnnealingPartitioner",
    "ArgumentError",
    "BenchPlan",
    "BenchRecord",
    "CapabilityError",
    "CoefficientOverflowError",
    "ExactPartitioner",
    "NppInstance",
    "PartitionSolution",
    "QaoaParams",
    "QaoaPartitioner",
    "QuboModel",
    "brute_force_best",
    "build_qubo",
    "dp_best_diff",
    "energy",
    "exact_best",
    "finalize",
    "generate_instance",
    "objective",
    "quality_ratio",
    "qubo_value",
    "run_ansatz",
    "run_benchmark",
    "sample_count",
    "simulated_anneal",
    "summarize",
]
