"""Black-box minimisers used to tune QAOA angles."""

from ._base import ObjectiveSpec, OptimizerConfig, OptimizerTrace, Tracker
from .aco import optimize_aco
from .de import optimize_de
from .ga import optimize_ga
from .pso import optimize_pso
from .simplex import optimize_simplex

OPTIMIZERS = {
    "baseline": optimize_simplex,
    "ga": optimize_ga,
    "de": optimize_de,
    "pso": optimize_pso,
    "aco": optimize_aco,
}

__all__ = [
    "OPTIMIZERS",
    "ObjectiveSpec",
    "OptimizerConfig",
    "OptimizerTrace",
    "Tracker",
    "optimize_aco",
    "optimize_de",
    "optimize_ga",
    "optimize_pso",
    "optimize_simplex",
]
