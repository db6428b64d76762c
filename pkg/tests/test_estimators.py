import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from metaqaoa.estimators import AnnealingPartitioner, ExactPartitioner, QaoaPartitioner
from metaqaoa.exceptions import ArgumentError
from metaqaoa.qubo import NppInstance, energy


def test_exact_fit_predict():
    labels = ExactPartitioner().fit_predict([4, 5, 6, 7, 8])
    np.testing.assert_array_equal(labels, [0, 0, 0, 1, 1])


def test_column_input():
    est = ExactPartitioner().fit(np.array([[5], [5], [5]]))
    assert est.difference_ == 5 and est.ratio_ == pytest.approx(4 / 3)
    assert est.score() == pytest.approx(-1 / 3)


@pytest.mark.parametrize("X", [[], [1, 0], [1.5, 2], [[1, 2], [3, 4]], [np.nan, 1], ["a", "b"]])
def test_rejects_bad_values(X):
    with pytest.raises((ArgumentError, ValueError)):
        ExactPartitioner().fit(X)


def test_score_requires_fit():
    with pytest.raises(NotFittedError):
        QaoaPartitioner().score()


def test_get_params_and_clone():
    est = QaoaPartitioner(optimizer="pso", layers=1, iterations=4, random_state=3)
    params = est.get_params()
    assert params == {"optimizer": "pso", "layers": 1, "population": 10, "iterations": 4,
                      "random_state": 3}
    twin = clone(est)
    assert twin.get_params() == params and twin is not est
    est.set_params(optimizer="de")
    assert est.optimizer == "de"


@pytest.mark.parametrize("optimizer", ["baseline", "ga", "de", "pso", "aco"])
def test_qaoa_partitioner(optimizer):
    values = [3, 1, 1, 2, 2, 1]
    est = QaoaPartitioner(optimizer=optimizer, iterations=5, random_state=0).fit(values)
    assert est.labels_.shape == (6,)
    assert set(est.labels_) <= {0, 1}
    assert est.solution_.energy == energy(NppInstance(tuple(values)), tuple(est.labels_))
    assert est.n_evaluations_ == est.trace_.evaluations > 0
    again = clone(est).fit(values)
    np.testing.assert_array_equal(again.labels_, est.labels_)


def test_qaoa_partitioner_validation():
    with pytest.raises(ArgumentError):
        QaoaPartitioner(optimizer="cobyla").fit([1, 2])
    with pytest.raises(ArgumentError):
        QaoaPartitioner(layers=0).fit([1, 2])


def test_annealing_partitioner():
    est = AnnealingPartitioner(reads=20, sweeps=50, random_state=1)
    labels = est.fit_predict([4, 5, 6, 7, 8])
    assert est.difference_ == 0
    assert sum(v for v, b in zip([4, 5, 6, 7, 8], labels) if b) in (15,)


def test_random_state_instance():
    est = AnnealingPartitioner(reads=2, sweeps=2, random_state=np.random.RandomState(0))
    est.fit([1, 2, 3])
    assert est.labels_.shape == (3,)
