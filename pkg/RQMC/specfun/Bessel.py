"""
Bessel J0 for real arguments.

|x| < 8: power series sum_k (-x^2/4)^k / (k!)^2.
|x| >= 8: trapezoid rule on J0(x) = (1/2pi) int_0^{2pi} cos(x sin t) dt, which is
spectrally accurate for a periodic integrand once the node count exceeds |x|.
"""

import numpy as np
from numpy.typing import ArrayLike

SERIES_CUTOFF = 8.0
SERIES_TERMS = 40


def _series(x: np.ndarray) -> np.ndarray:
    quarter_square = 0.25 * x**2
    term = np.ones_like(x)
    total = np.ones_like(x)
    for k in range(1, SERIES_TERMS + 1):
        term = -term * quarter_square / (k * k)
        total = total + term
    return total


def _trapezoid(x: np.ndarray) -> np.ndarray:
    if x.size == 0:
        return x
    nodes = int(1.3 * np.max(np.abs(x))) + 40
    theta = 2.0 * np.pi * np.arange(nodes) / nodes
    return np.mean(np.cos(np.outer(x, np.sin(theta))), axis=1)


def bessel_j0(x: ArrayLike) -> np.ndarray | float:
    """
    J0(x), accurate to about 1e-13 absolute on |x| <= 50.
    """
    x_arr = np.abs(np.atleast_1d(np.asarray(x, dtype=float)))
    values = np.empty_like(x_arr)
    small = x_arr < SERIES_CUTOFF
    values[small] = _series(x_arr[small])
    values[~small] = _trapezoid(x_arr[~small])
    if np.ndim(x) == 0:
        return float(values[0])
    return values.reshape(np.shape(x))
