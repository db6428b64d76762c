"""Benchmark matrix: sizes x instances x optimizers, persisted as CSV.

Seed derivation (stable across versions, pinned by tests)::

    instance_seed = derive_seed(master, n, instance_index)
    run_seed      = derive_seed(master, n, instance_index, 1 + OPTIMIZER_NAMES.index(name))

where ``derive_seed`` hashes its integer arguments with
``numpy.random.SeedSequence`` and keeps the low 63 bits of the first two
32-bit words.
"""

from __future__ import annotations

import csv
import io
import logging
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .baselines import SA_LABEL, AnnealConfig, exact_best, simulated_anneal
from .exceptions import ArgumentError
from .optimizers import OPTIMIZERS, ObjectiveSpec, OptimizerConfig
from .qaoa import QaoaCircuit, QaoaParams, finalize
from .qubo import NppInstance, build_qubo, generate_instance

logger = logging.getLogger(__name__)

OPTIMIZER_NAMES = ("baseline", "ga", "de", "pso", "aco", SA_LABEL)
DEFAULT_MASTER_SEED = 2024
CSV_HEADER = (
    "optimizer",
    "n",
    "instance_seed",
    "run_seed",
    "best_energy",
    "R",
    "R_minus_1",
    "opt_gap",
    "evals",
    "samples",
    "wall_time_s",
)
SUMMARY_HEADER = (
    "optimizer",
    "n",
    "runs",
    "mean_R_minus_1",
    "mean_wall_time_s",
    "mean_evals",
)
TIMING_COLUMNS = ("wall_time_s",)


def derive_seed(*parts: int) -> int:
    words = np.random.SeedSequence([int(p) for p in parts]).generate_state(2, np.uint32)
    return ((int(words[0]) << 32) | int(words[1])) & (2**63 - 1)


def fmt_float(x: float) -> str:
    return "nan" if math.isnan(x) else format(x, ".12g")


@dataclass
class BenchPlan:
    sizes: Sequence[int] = (4, 8, 12)
    instances: int = 5
    optimizers: Sequence[str] = OPTIMIZER_NAMES
    layers: int = 2
    population: int = 10
    iterations: int = 50
    seed: int = DEFAULT_MASTER_SEED
    lo: int = 1
    hi: int = 100
    workers: int = 1

    def validate(self) -> "BenchPlan":
        if not self.sizes:
            raise ArgumentError("at least one size is required")
        if not self.optimizers:
            raise ArgumentError("at least one optimizer is required")
        unknown = [o for o in self.optimizers if o not in OPTIMIZER_NAMES]
        if unknown:
            raise ArgumentError(f"unknown optimizer(s): {', '.join(unknown)}")
        if any(n < 1 for n in self.sizes):
            raise ArgumentError("sizes must be positive")
        if self.instances < 1:
            raise ArgumentError("instances must be at least 1")
        if self.layers < 0 or self.population < 1 or self.iterations < 0:
            raise ArgumentError("layers, population and iterations must be non-negative")
        if self.seed < 0:
            raise ArgumentError("master seed must be non-negative")
        return self


@dataclass
class BenchRecord:
    optimizer: str
    n: int
    instance_seed: Optional[int]
    run_seed: int
    best_energy: float
    R: float
    R_minus_1: float
    opt_gap: float
    evals: int
    samples: int
    wall_time_s: float
    instance_index: int = field(default=0, compare=False)
    error: Optional[str] = field(default=None, compare=False)

    def to_row(self) -> list[str]:
        def num(v):
            if isinstance(v, float):
                return fmt_float(v)
            return "" if v is None else str(v)

        return [num(getattr(self, name)) for name in CSV_HEADER]

    @classmethod
    def from_row(cls, row: dict) -> "BenchRecord":
        def opt_int(s):
            return None if s in ("", None) else int(s)

        def num(s):
            return int(s) if s.lstrip("-").isdigit() else float(s)

        best = num(row["best_energy"])
        error = "error row" if isinstance(best, float) and math.isnan(best) else None
        return cls(
            optimizer=row["optimizer"],
            n=int(row["n"]),
            instance_seed=opt_int(row["instance_seed"]),
            run_seed=int(row["run_seed"]),
            best_energy=best,
            R=float(row["R"]),
            R_minus_1=float(row["R_minus_1"]),
            opt_gap=num(row["opt_gap"]),
            evals=num(row["evals"]),
            samples=num(row["samples"]),
            wall_time_s=float(row["wall_time_s"]),
            error=error,
        )

    @property
    def is_error(self) -> bool:
        return self.error is not None


def error_record(optimizer, n, instance_seed, run_seed, index, message) -> BenchRecord:
    nan = float("nan")
    return BenchRecord(
        optimizer, n, instance_seed, run_seed, nan, nan, nan, nan, 0, 0, nan,
        instance_index=index, error=message,
    )


def run_single(
    instance: NppInstance,
    optimizer: str,
    seed: int,
    layers: int = 2,
    population: int = 10,
    iterations: int = 50,
    instance_index: int = 0,
    anneal: Optional[AnnealConfig] = None,
) -> BenchRecord:
    """One optimizer on one instance; wall time spans optimize + finalize."""
    if optimizer not in OPTIMIZER_NAMES:
        raise ArgumentError(f"unknown optimizer {optimizer!r}")
    model = build_qubo(instance)
    reference = exact_best(instance)

    if optimizer == SA_LABEL:
        cfg = anneal or AnnealConfig()
        cfg = AnnealConfig(cfg.reads, cfg.sweeps, cfg.t_hi, cfg.t_lo, seed)
        started = time.perf_counter()
        best = simulated_anneal(model, cfg)
        wall = time.perf_counter() - started
        evals = cfg.reads * (1 + cfg.sweeps * model.n)
        samples = cfg.reads
    else:
        rng = np.random.default_rng(seed)
        circuit = QaoaCircuit(model)
        spec = ObjectiveSpec(2 * layers, circuit)
        cfg = OptimizerConfig(population=population, iterations=iterations, seed=seed)
        started = time.perf_counter()
        if layers == 0:
            params, evals = QaoaParams.zeros(0), 0
        else:
            trace = OPTIMIZERS[optimizer](spec, cfg, rng)
            params, evals = QaoaParams.from_vector(trace.best_x), trace.evaluations
        outcome = finalize(model, params, rng, evals, started, circuit)
        best, wall, samples = outcome.best, outcome.wall_time, outcome.samples_taken

    return BenchRecord(
        optimizer=optimizer,
        n=instance.n,
        instance_seed=instance.seed,
        run_seed=seed,
        best_energy=best.energy,
        R=float(best.ratio),
        R_minus_1=float(best.ratio - 1),
        opt_gap=best.energy - reference.energy,
        evals=evals,
        samples=samples,
        wall_time_s=max(wall, 1e-9),
        instance_index=instance_index,
    )


def _run_cell(args) -> BenchRecord:
    plan, n, index, optimizer = args
    instance_seed = derive_seed(plan.seed, n, index)
    run_seed = derive_seed(plan.seed, n, index, 1 + OPTIMIZER_NAMES.index(optimizer))
    try:
        instance = generate_instance(n, instance_seed, plan.lo, plan.hi)
        return run_single(
            instance, optimizer, run_seed, plan.layers, plan.population,
            plan.iterations, instance_index=index,
        )
    except Exception as exc:  # one bad cell must not sink the matrix
        logger.error("cell n=%d instance=%d %s failed: %s", n, index, optimizer, exc)
        return error_record(optimizer, n, instance_seed, run_seed, index, str(exc))


def run_benchmark(plan: BenchPlan) -> list[BenchRecord]:
    plan.validate()
    cells = [
        (plan, n, index, opt)
        for n in plan.sizes
        for index in range(plan.instances)
        for opt in plan.optimizers
    ]
    if plan.workers > 1:
        with ProcessPoolExecutor(max_workers=plan.workers) as pool:
            records = list(pool.map(_run_cell, cells))
    else:
        records = [_run_cell(c) for c in cells]
    order = {name: k for k, name in enumerate(OPTIMIZER_NAMES)}
    records.sort(key=lambda r: (r.n, r.instance_index, order[r.optimizer]))
    return records


def records_to_csv(records: Iterable[BenchRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for rec in records:
        writer.writerow(rec.to_row())
    return buf.getvalue()


def records_from_csv(text: str) -> list[BenchRecord]:
    reader = csv.DictReader(io.StringIO(text))
    if tuple(reader.fieldnames or ()) != CSV_HEADER:
        raise ArgumentError(f"unexpected CSV header: {reader.fieldnames}")
    return [BenchRecord.from_row(row) for row in reader]


def write_records(records: Iterable[BenchRecord], path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(records_to_csv(records))


def read_records(path: str | os.PathLike) -> list[BenchRecord]:
    with open(path, encoding="utf-8", newline="") as fh:
        return records_from_csv(fh.read())


@dataclass
class SummaryRow:
    optimizer: str
    n: int
    runs: int
    mean_R_minus_1: float
    mean_wall_time_s: float
    mean_evals: float

    def to_row(self) -> list[str]:
        return [
            self.optimizer,
            str(self.n),
            str(self.runs),
            fmt_float(self.mean_R_minus_1),
            fmt_float(self.mean_wall_time_s),
            fmt_float(self.mean_evals),
        ]


def summarize(records: Sequence[BenchRecord]) -> list[SummaryRow]:
    """Per-(optimizer, n) arithmetic means; error rows are skipped."""
    if not records:
        raise ArgumentError("nothing to summarize")
    groups: dict[tuple[str, int], list[BenchRecord]] = {}
    for rec in records:
        if not rec.is_error:
            groups.setdefault((rec.optimizer, rec.n), []).append(rec)
    order = {name: k for k, name in enumerate(OPTIMIZER_NAMES)}
    rows = [
        SummaryRow(
            opt,
            n,
            len(recs),
            float(np.mean([r.R_minus_1 for r in recs])),
            float(np.mean([r.wall_time_s for r in recs])),
            float(np.mean([r.evals for r in recs])),
        )
        for (opt, n), recs in groups.items()
    ]
    rows.sort(key=lambda r: (r.n, order.get(r.optimizer, len(order)), r.optimizer))
    return rows


def summary_to_csv(rows: Iterable[SummaryRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SUMMARY_HEADER)
    for row in rows:
        writer.writerow(row.to_row())
    return buf.getvalue()


def summary_from_csv(text: str) -> list[SummaryRow]:
    reader = csv.DictReader(io.StringIO(text))
    if tuple(reader.fieldnames or ()) != SUMMARY_HEADER:
        raise ArgumentError(f"unexpected summary header: {reader.fieldnames}")
    return [
        SummaryRow(
            r["optimizer"],
            int(r["n"]),
            int(r["runs"]),
            float(r["mean_R_minus_1"]),
            float(r["mean_wall_time_s"]),
            float(r["mean_evals"]),
        )
        for r in reader
    ]
