import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from metaqaoa.exceptions import ArgumentError
from metaqaoa.qaoa import (
    QaoaCircuit,
    QaoaParams,
    cost_layer_angles,
    finalize,
    gates_per_layer,
    mixer_angle,
    objective,
    run_ansatz,
    sample_count,
)
from metaqaoa.qubo import NppInstance, brute_force_best, build_qubo, energy, generate_instance
from metaqaoa.statevector import StateVector

from .conftest import bitstrings

params_st = st.integers(1, 3).flatmap(
    lambda p: st.lists(st.floats(-math.pi, math.pi), min_size=2 * p, max_size=2 * p)
).map(QaoaParams.from_vector)


class TestAngles:
    def test_worked_example(self):
        m = build_qubo(NppInstance((1, 2, 3)))
        theta1, theta2 = cost_layer_angles(m, 1.0)
        assert theta1 == [10.0, 16.0, 18.0]
        assert theta2 == {(0, 1): 4.0, (0, 2): 6.0, (1, 2): 12.0}

    def test_zero_gamma(self):
        theta1, theta2 = cost_layer_angles(build_qubo(generate_instance(5, 1)), 0.0)
        assert all(t == 0 for t in theta1) and all(t == 0 for t in theta2.values())

    def test_linear_in_gamma(self):
        m = build_qubo(generate_instance(5, 2))
        a1, a2 = cost_layer_angles(m, 0.37)
        b1, b2 = cost_layer_angles(m, 0.74)
        np.testing.assert_allclose(b1, 2 * np.array(a1))
        np.testing.assert_allclose(list(b2.values()), 2 * np.array(list(a2.values())))

    def test_mixer(self):
        assert mixer_angle(0.0) == 0.0
        assert mixer_angle(math.pi / 2) == math.pi
        assert mixer_angle(-math.pi) == -2 * math.pi


class TestParams:
    def test_vector_round_trip(self):
        p = QaoaParams((0.1, 0.2), (0.3, 0.4))
        assert p.to_vector().tolist() == [0.1, 0.2, 0.3, 0.4]
        assert QaoaParams.from_vector(p.to_vector()) == p

    def test_random_in_open_box(self):
        p = QaoaParams.random(50, np.random.default_rng(0))
        assert p.p == 50
        assert all(-math.pi < v < math.pi for v in p.to_vector())

    def test_odd_vector(self):
        with pytest.raises(ArgumentError):
            QaoaParams.from_vector([0.1, 0.2, 0.3])


class TestAnsatz:
    def test_p0_uniform(self):
        m = build_qubo(generate_instance(4, 1))
        np.testing.assert_allclose(run_ansatz(m, QaoaParams.zeros(0)).amps, np.full(16, 0.25))

    def test_zero_params_uniform_probabilities(self):
        m = build_qubo(generate_instance(4, 1))
        s = run_ansatz(m, QaoaParams.zeros(2))
        np.testing.assert_allclose(s.probabilities(), np.full(16, 1 / 16), atol=1e-14)

    def test_minus_pi_beta_is_global_phase(self):
        m = build_qubo(NppInstance((1, 2, 3)))
        a = run_ansatz(m, QaoaParams((0.3,), (0.0,))).probabilities()
        b = run_ansatz(m, QaoaParams((0.3,), (-math.pi,))).probabilities()
        np.testing.assert_allclose(a, b, atol=1e-12)

    @settings(max_examples=25)
    @given(params_st)
    def test_unitary(self, params):
        s = run_ansatz(build_qubo(NppInstance((1, 2, 3))), params)
        assert abs(s.norm() - 1) < 1e-10

    @pytest.mark.parametrize("n, p", [(3, 2), (5, 1), (6, 3)])
    def test_gate_count(self, n, p):
        m = build_qubo(generate_instance(n, n))
        s = run_ansatz(m, QaoaParams.random(p, np.random.default_rng(0)))
        assert s.gate_count == p * (n + n * (n - 1) // 2 + n) == p * gates_per_layer(n)

    @settings(max_examples=20)
    @given(params_st)
    def test_fast_path_matches_gates(self, params):
        m = build_qubo(generate_instance(5, 9))
        slow = run_ansatz(m, params).amps
        fast = QaoaCircuit(m).state(params).amps
        np.testing.assert_allclose(fast, slow, atol=1e-9)


class TestObjective:
    def test_zero_params(self):
        m = build_qubo(NppInstance((1, 2, 3)))
        assert abs(objective(m, QaoaParams.zeros(2)) - 14.0) < 1e-9

    @pytest.mark.parametrize("seed", range(6))
    def test_zero_params_sum_of_squares(self, seed):
        inst = generate_instance(2 + seed, seed)
        mean = sum(energy(inst, z) for z in bitstrings(inst.n)) / 2**inst.n
        assert mean == sum(a * a for a in inst.values)
        assert abs(objective(build_qubo(inst), QaoaParams.zeros(2)) - mean) < 1e-9

    @settings(max_examples=25)
    @given(params_st)
    def test_bounded_below(self, params):
        inst = NppInstance((3, 5, 7, 2))
        value = objective(build_qubo(inst), params)
        assert value >= brute_force_best(inst).energy - 1e-9
        assert value >= 0

    def test_continuity(self):
        rng = np.random.default_rng(4)
        for n in (4, 8, 12):
            inst = generate_instance(n, 100 + n)
            circuit = QaoaCircuit(build_qubo(inst))
            x = QaoaParams.random(2, rng).to_vector()
            y = x.copy()
            y[0] += 1e-7
            # |d<E>| <= 2 max|E| * max|generator| * |d gamma|
            bound = 2 * circuit.energies.max() * np.abs(circuit.generator).max() * 1e-7
            assert abs(circuit(y) - circuit(x)) <= bound

    def test_shot_mode(self):
        m = build_qubo(NppInstance((1, 2, 3)))
        p = QaoaParams.zeros(1)
        a = objective(m, p, shots=20000, rng=np.random.default_rng(0))
        assert abs(a - 14.0) < 0.5
        assert a == objective(m, p, shots=20000, rng=np.random.default_rng(0))

    def test_circuit_counts_evaluations(self):
        c = QaoaCircuit(build_qubo(NppInstance((1, 2, 3))))
        c(np.zeros(2))
        c(np.zeros(4))
        assert c.evaluations == 2


class TestSampleCount:
    @pytest.mark.parametrize("n, s", [(1, 1), (3, 1), (4, 1), (8, 2), (10, 3), (12, 3), (20, 6)])
    def test_values(self, n, s):
        assert sample_count(n) == s

    def test_matches_log_formula(self):
        for n in range(4, 64):
            assert sample_count(n) == math.floor(n * math.log10(2))

    def test_rejects_zero(self):
        with pytest.raises(ArgumentError):
            sample_count(0)


class TestFinalize:
    def test_concentrated_state(self, monkeypatch):
        inst = NppInstance((4, 5, 6, 7, 8))
        m = build_qubo(inst)
        circuit = QaoaCircuit(m)
        monkeypatch.setattr(circuit, "state", lambda params: StateVector.basis((0, 0, 0, 1, 1)))
        out = finalize(m, QaoaParams.zeros(2), np.random.default_rng(0), circuit=circuit)
        assert out.best.ratio == 1 and out.best.energy == 0

    def test_deterministic(self):
        m = build_qubo(generate_instance(8, 3))
        p = QaoaParams.random(2, np.random.default_rng(1))
        a = finalize(m, p, np.random.default_rng(7))
        b = finalize(m, p, np.random.default_rng(7))
        assert a.best == b.best and a.samples == b.samples

    @pytest.mark.parametrize("seed", range(5))
    def test_best_of_samples(self, seed):
        inst = NppInstance((4, 5, 6, 7, 8))
        m = build_qubo(inst)
        p = QaoaParams.random(2, np.random.default_rng(seed))
        out = finalize(m, p, np.random.default_rng(seed), evaluations=17)
        assert out.samples_taken == sample_count(5) == len(out.samples)
        energies = [energy(inst, z) for z in out.samples]
        assert out.best.energy == min(energies)
        assert out.best.bitstring == min(z for z in out.samples if energy(inst, z) == min(energies))
        assert out.evaluations == 17 and out.wall_time > 0
        assert out.objective_value == pytest.approx(objective(m, p), rel=1e-12)

    def test_needs_instance(self):
        from metaqaoa.qubo import QuboModel

        bare = QuboModel(1, 1, (0,), {})
        with pytest.raises(ArgumentError):
            finalize(bare, QaoaParams.zeros(1), np.random.default_rng(0))
