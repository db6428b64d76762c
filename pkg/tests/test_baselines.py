import numpy as np
import pytest

from metaqaoa.baselines import (
    SA_LABEL,
    AnnealConfig,
    anneal_reads,
    exact_best,
    max_flip_delta,
    simulated_anneal,
    temperature_schedule,
)
from metaqaoa.exceptions import ArgumentError, CapabilityError
from metaqaoa.qubo import (
    NppInstance,
    brute_force_best,
    build_qubo,
    dp_best_diff,
    energy,
    generate_instance,
    qubo_value,
)

from .conftest import bitstrings


def test_label():
    assert SA_LABEL == "sa-baseline"


class TestSchedule:
    def test_geometric(self):
        m = build_qubo(NppInstance((1, 2, 3)))
        temps = temperature_schedule(m, AnnealConfig(sweeps=5, t_hi=16.0, t_lo=1.0))
        np.testing.assert_allclose(temps, [16, 8, 4, 2, 1])

    def test_default_hot_end(self):
        m = build_qubo(NppInstance((1, 2, 3)))
        # |c_i| + sum_j Q_ij per qubit: 20+40, 32+64, 36+72
        assert max_flip_delta(m) == 108
        assert temperature_schedule(m, AnnealConfig(sweeps=3))[0] == 1080

    def test_max_flip_delta_is_a_bound(self):
        inst = generate_instance(6, 2)
        m = build_qubo(inst)
        worst = max(
            abs(energy(inst, z) - energy(inst, z[:i] + (1 - z[i],) + z[i + 1 :]))
            for z in bitstrings(6)
            for i in range(6)
        )
        assert worst <= max_flip_delta(m)

    @pytest.mark.parametrize(
        "kwargs", [{"reads": 0}, {"sweeps": -1}, {"t_lo": 0.0}, {"t_hi": 0.05, "t_lo": 0.1}]
    )
    def test_validation(self, kwargs):
        with pytest.raises(ArgumentError):
            AnnealConfig(**kwargs).validate()


class TestAnneal:
    def test_small_instance_panel(self):
        m = build_qubo(NppInstance((4, 5, 6, 7, 8)))
        hits = sum(
            simulated_anneal(m, AnnealConfig(seed=seed)).energy == 0 for seed in range(10)
        )
        assert hits >= 9

    def test_no_sweeps_returns_start(self):
        inst = generate_instance(6, 4)
        m = build_qubo(inst)
        cfg = AnnealConfig(reads=1, sweeps=0, seed=9)
        bits, energies = anneal_reads(m, cfg)
        assert energies[0] == energy(inst, tuple(bits[0]))
        # the start comes from the first stream of read 0
        child = np.random.SeedSequence([9, 0]).spawn(3)[0]
        start = tuple(int(b) for b in np.random.default_rng(child).random(6) < 0.5)
        assert tuple(bits[0]) == start
        assert simulated_anneal(m, cfg).bitstring == start

    @pytest.mark.parametrize("seed", range(4))
    def test_dominated_by_oracle(self, seed):
        inst = generate_instance(7, seed)
        m = build_qubo(inst)
        sol = simulated_anneal(m, AnnealConfig(reads=5, sweeps=20, seed=seed))
        assert sol.energy >= brute_force_best(inst).energy
        assert sol.energy == energy(inst, sol.bitstring)

    def test_best_of_reads(self):
        inst = generate_instance(8, 5)
        m = build_qubo(inst)
        cfg = AnnealConfig(reads=30, sweeps=10, seed=2)
        bits, energies = anneal_reads(m, cfg)
        for row, e in zip(bits, energies):
            assert qubo_value(m, tuple(row)) == e
        assert simulated_anneal(m, cfg).energy == energies.min()

    def test_reads_independent_of_batch(self):
        # read r only depends on (seed, r), so a prefix of reads is reproduced
        m = build_qubo(generate_instance(6, 1))
        b10, e10 = anneal_reads(m, AnnealConfig(reads=10, sweeps=100, seed=3))
        b4, e4 = anneal_reads(m, AnnealConfig(reads=4, sweeps=100, seed=3))
        np.testing.assert_array_equal(b10[:4], b4)
        np.testing.assert_array_equal(e10[:4], e4)

    def test_deterministic(self):
        m = build_qubo(generate_instance(8, 6))
        cfg = AnnealConfig(reads=20, sweeps=50, seed=4)
        assert simulated_anneal(m, cfg) == simulated_anneal(m, cfg)

    def test_infinite_temperature_is_uniform(self):
        m = build_qubo(NppInstance((3, 1, 2)))
        visits = np.zeros(8, dtype=np.int64)
        anneal_reads(m, AnnealConfig(reads=100, sweeps=1000, t_hi=1e15, t_lo=1e14), visits)
        freq = visits / visits.sum()
        assert visits.sum() == 100 * 1000 * 3
        np.testing.assert_allclose(freq, 1 / 8, rtol=0.03)


class TestExactBest:
    def test_examples(self):
        assert exact_best(NppInstance((1, 2, 3))).d == 0
        assert exact_best(NppInstance((5, 5, 5))).d == 5

    def test_switches_to_dp(self):
        inst = generate_instance(30, 8)
        sol = exact_best(inst)
        assert sol.d == dp_best_diff(inst)
        assert sol.energy == energy(inst, sol.bitstring)

    def test_beyond_both_bounds(self):
        with pytest.raises(CapabilityError):
            exact_best(NppInstance((10**8 - 12,) + (1,) * 12))
