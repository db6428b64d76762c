"""Number partitioning instances, their QUBO form and exact oracles.

Bitstrings are sequences of 0/1 of length ``n``; index ``i`` refers to
``values[i]``.  When a bitstring is packed into an integer it is read
big-endian, so ``values[0]`` is the most significant bit.  Everything here
uses Python integers, so energies are exact.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .exceptions import ArgumentError, CapabilityError, CoefficientOverflowError

INT64_MAX = 2**63 - 1
BRUTE_FORCE_MAX_N = 24
DP_MAX_TOTAL = 10**7


@dataclass(frozen=True)
class NppInstance:
    """A multiset of positive integers to split into two equal-sum halves."""

    values: tuple[int, ...]
    seed: Optional[int] = None

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        if not values:
            raise ArgumentError("an instance needs at least one value")
        if any(v < 1 for v in values):
            raise ArgumentError("instance values must be positive integers")
        if sum(values) > INT64_MAX:
            raise CoefficientOverflowError("sum of values overflows int64")
        object.__setattr__(self, "values", values)

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def total(self) -> int:
        return sum(self.values)

    def to_json(self) -> str:
        return json.dumps({"values": list(self.values), "seed": self.seed})

    @classmethod
    def from_json(cls, text: str) -> "NppInstance":
        try:
            payload = json.loads(text)
            values = payload["values"]
        except (ValueError, KeyError, TypeError) as exc:
            raise ArgumentError(f"malformed instance document: {exc}") from exc
        if not isinstance(values, list) or not all(
            isinstance(v, int) and not isinstance(v, bool) for v in values
        ):
            raise ArgumentError("'values' must be a list of integers")
        seed = payload.get("seed")
        if seed is not None and not isinstance(seed, int):
            raise ArgumentError("'seed' must be an integer or null")
        return cls(tuple(values), seed)

    def save(self, path: str | os.PathLike) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.to_json())
            fh.write("\n")

    @classmethod
    def load(cls, path: str | os.PathLike) -> "NppInstance":
        with open(path, encoding="utf-8") as fh:
            return cls.from_json(fh.read())


@dataclass(frozen=True)
class QuboModel:
    """``constant + sum_i linear[i] z_i + sum_{i<j} quad[i, j] z_i z_j``."""

    n: int
    constant: int
    linear: tuple[int, ...]
    quad: dict[tuple[int, int], int]
    instance: Optional[NppInstance] = field(default=None, compare=False)

    def coupling_matrix(self) -> np.ndarray:
        """Symmetric float matrix with ``quad`` on both triangles, zero diagonal."""
        mat = np.zeros((self.n, self.n))
        for (i, j), q in self.quad.items():
            mat[i, j] = mat[j, i] = q
        return mat

    def energies(self) -> np.ndarray:
        """Float energies of all ``2**n`` bitstrings, indexed big-endian."""
        bits = all_bitstrings(self.n).astype(float)
        upper = np.triu(self.coupling_matrix(), 1)
        lin = np.asarray(self.linear, dtype=float)
        return self.constant + bits @ lin + np.einsum("ki,ij,kj->k", bits, upper, bits)


@dataclass(frozen=True)
class PartitionSolution:
    bitstring: tuple[int, ...]
    subset_sum: int
    d: int
    energy: int
    ratio: Fraction

    @property
    def r_minus_1(self) -> float:
        return float(self.ratio - 1)


def all_bitstrings(n: int) -> np.ndarray:
    """``(2**n, n)`` uint8 array; row ``k`` is ``k`` written big-endian."""
    k = np.arange(2**n, dtype=np.int64)
    shifts = np.arange(n - 1, -1, -1, dtype=np.int64)
    return ((k[:, None] >> shifts) & 1).astype(np.uint8)


def bits_to_index(bitstring: Sequence[int]) -> int:
    out = 0
    for b in bitstring:
        out = (out << 1) | int(b)
    return out


def index_to_bits(index: int, n: int) -> tuple[int, ...]:
    return tuple((index >> (n - 1 - q)) & 1 for q in range(n))


def _check_bits(n: int, bitstring: Sequence[int]) -> tuple[int, ...]:
    bits = tuple(int(b) for b in bitstring)
    if len(bits) != n:
        raise ArgumentError(f"bitstring has length {len(bits)}, expected {n}")
    if any(b not in (0, 1) for b in bits):
        raise ArgumentError("bitstring entries must be 0 or 1")
    return bits


def generate_instance(n: int, seed: int, lo: int = 1, hi: int = 100) -> NppInstance:
    """Draw ``n`` integers uniformly from ``[lo, hi]`` with a seeded PCG64 stream."""
    if n < 1:
        raise ArgumentError("n must be at least 1")
    if not 1 <= lo <= hi:
        raise ArgumentError(f"need 1 <= lo <= hi, got lo={lo}, hi={hi}")
    if seed < 0:
        raise ArgumentError("seed must be non-negative")
    if n * hi > INT64_MAX:
        raise CoefficientOverflowError("instance total could overflow int64")
    rng = np.random.default_rng(seed)
    values = rng.integers(lo, hi, size=n, endpoint=True, dtype=np.int64)
    return NppInstance(tuple(int(v) for v in values), seed)


def build_qubo(instance: NppInstance) -> QuboModel:
    """Expand ``(c - 2 sum a_i x_i)**2`` using ``x_i**2 == x_i``."""
    a = instance.values
    c = instance.total
    constant = c * c
    linear = tuple(4 * ai * ai - 4 * c * ai for ai in a)
    quad = {
        (i, j): 8 * a[i] * a[j] for i in range(len(a)) for j in range(i + 1, len(a))
    }
    biggest = max([constant, *map(abs, linear), *quad.values()])
    if biggest > INT64_MAX:
        raise CoefficientOverflowError("QUBO coefficient overflows int64")
    return QuboModel(len(a), constant, linear, quad, instance)


def subset_sum(instance: NppInstance, bitstring: Sequence[int]) -> int:
    bits = _check_bits(instance.n, bitstring)
    return sum(a for a, b in zip(instance.values, bits) if b)


def energy(instance: NppInstance, bitstring: Sequence[int]) -> int:
    d = instance.total - 2 * subset_sum(instance, bitstring)
    return d * d


def qubo_value(model: QuboModel, bitstring: Sequence[int]) -> int:
    z = _check_bits(model.n, bitstring)
    value = model.constant + sum(c for c, b in zip(model.linear, z) if b)
    value += sum(q for (i, j), q in model.quad.items() if z[i] and z[j])
    return value


def quality_ratio(instance: NppInstance, bitstring: Sequence[int]) -> Fraction:
    """``max(b1, b2) / (c / 2)`` as an exact fraction (always >= 1)."""
    b1 = subset_sum(instance, bitstring)
    b2 = instance.total - b1
    return Fraction(2 * max(b1, b2), instance.total)


def make_solution(instance: NppInstance, bitstring: Sequence[int]) -> PartitionSolution:
    bits = _check_bits(instance.n, bitstring)
    s = subset_sum(instance, bits)
    d = abs(instance.total - 2 * s)
    return PartitionSolution(bits, s, d, d * d, quality_ratio(instance, bits))


def brute_force_best(instance: NppInstance) -> PartitionSolution:
    """Exhaustive minimum; ties go to the smallest big-endian bitstring."""
    n = instance.n
    if n > BRUTE_FORCE_MAX_N:
        raise CapabilityError(f"brute force is limited to n <= {BRUTE_FORCE_MAX_N}")
    a = np.asarray(instance.values, dtype=np.int64)
    best_index, best_energy = 0, None
    # chunked so n = 24 stays within a few hundred MB
    chunk = 1 << min(n, 16)
    shifts = np.arange(n - 1, -1, -1, dtype=np.int64)
    for start in range(0, 1 << n, chunk):
        k = np.arange(start, min(start + chunk, 1 << n), dtype=np.int64)
        sums = ((k[:, None] >> shifts) & 1) @ a
        d = np.abs(instance.total - 2 * sums)
        pos = int(np.argmin(d))  # argmin returns the first (smallest index) tie
        e = int(d[pos]) ** 2
        if best_energy is None or e < best_energy:
            best_index, best_energy = int(k[pos]), e
    return make_solution(instance, index_to_bits(best_index, n))


def _reachable_sums(values: Sequence[int], limit: int) -> np.ndarray:
    reach = np.zeros(limit + 1, dtype=bool)
    reach[0] = True
    for a in values:
        if a <= limit:
            reach[a:] |= reach[: limit + 1 - a].copy()
    return reach


def dp_best_diff(instance: NppInstance) -> int:
    """Minimal achievable ``d`` via subset-sum reachability up to ``c // 2``."""
    c = instance.total
    if c > DP_MAX_TOTAL:
        raise CapabilityError(f"dynamic programming is limited to totals <= {DP_MAX_TOTAL}")
    reach = _reachable_sums(instance.values, c // 2)
    best = int(np.flatnonzero(reach)[-1])
    return c - 2 * best


def dp_best_solution(instance: NppInstance) -> PartitionSolution:
    """Reconstruct one optimal assignment from the DP table.

    Not tie-broken like :func:`brute_force_best`; only ``d`` is canonical.
    """
    c = instance.total
    if c > DP_MAX_TOTAL:
        raise CapabilityError(f"dynamic programming is limited to totals <= {DP_MAX_TOTAL}")
    half = c // 2
    values = instance.values
    layers = [np.zeros(half + 1, dtype=bool)]
    layers[0][0] = True
    for a in values:
        prev = layers[-1]
        nxt = prev.copy()
        if a <= half:
            nxt[a:] |= prev[: half + 1 - a]
        layers.append(nxt)
    target = int(np.flatnonzero(layers[-1])[-1])
    bits = [0] * len(values)
    for i in range(len(values) - 1, -1, -1):
        if not layers[i][target]:
            bits[i] = 1
            target -= values[i]
    return make_solution(instance, bits)
