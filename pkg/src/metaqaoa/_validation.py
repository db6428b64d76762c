"""Input checks for the estimator API."""

from __future__ import annotations

import numbers

import numpy as np
from sklearn.utils import check_array, check_random_state

from .exceptions import ArgumentError


def check_values(X) -> tuple[int, ...]:
    """Accept a 1-D sequence or a single-column 2-D array of positive integers."""
    arr = check_array(X, ensure_2d=False, dtype=None, ensure_all_finite=True)
    if arr.ndim == 2:
        if arr.shape[1] != 1:
            raise ArgumentError(
                f"expected a single column of values, got shape {arr.shape}"
            )
        arr = arr[:, 0]
    if arr.ndim != 1 or arr.size == 0:
        raise ArgumentError("expected a non-empty 1-D array of values")
    if not np.issubdtype(arr.dtype, np.number):
        raise ArgumentError("values must be numeric")
    if np.any(arr != np.round(arr)):
        raise ArgumentError("values must be integers")
    if np.any(arr < 1):
        raise ArgumentError("values must be positive")
    return tuple(int(v) for v in arr)


def resolve_seed(random_state) -> int:
    """Turn a scikit-learn style ``random_state`` into a non-negative int seed."""
    if isinstance(random_state, numbers.Integral) and not isinstance(random_state, bool):
        if random_state < 0:
            raise ArgumentError("random_state must be non-negative")
        return int(random_state)
    return int(check_random_state(random_state).randint(0, 2**31 - 1))
