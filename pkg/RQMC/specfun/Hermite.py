"""
Orthonormal Hermite functions h_n(x) = H_n(x) exp(-x^2/2) / sqrt(2^n n! sqrt(pi)).

Raw H_n is never formed: the normalized three-term recurrence is run on a mantissa
with a separate log scale, so neither the Gaussian nor 2^n n! can overflow or underflow.
"""

import numpy as np
from numpy.typing import ArrayLike
from RQMC.core.Errors import ConfigurationError

# Mantissas larger than this are folded into the log scale
RESCALE_THRESHOLD = 1e100
_LOG_RESCALE = np.log(RESCALE_THRESHOLD)


def _recurrence(n: int, x: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Run the recurrence up to order n.

    Returns:
        (mantissa of h_{n-1}, mantissa of h_n, log scale shared by both)
    """
    log_scale = -0.5 * x**2 - 0.25 * np.log(np.pi)
    h_prev = np.zeros_like(x)
    h = np.ones_like(x)
    for k in range(n):
        h_next = x * np.sqrt(2.0 / (k + 1)) * h - np.sqrt(k / (k + 1)) * h_prev
        h_prev, h = h, h_next
        big = np.abs(h) > RESCALE_THRESHOLD
        if np.any(big):
            h[big] /= RESCALE_THRESHOLD
            h_prev[big] /= RESCALE_THRESHOLD
            log_scale[big] += _LOG_RESCALE
    return h_prev, h, log_scale


def _unscale(mantissa: np.ndarray, log_scale: np.ndarray) -> np.ndarray:
    with np.errstate(divide="ignore"):
        magnitude = np.exp(np.log(np.abs(mantissa)) + log_scale)
    return np.where(mantissa == 0, 0.0, np.sign(mantissa) * magnitude)


def _as_output(values: np.ndarray, x: ArrayLike):
    return float(values) if np.ndim(x) == 0 else values


def hermite_scaled(n: int, x: ArrayLike) -> np.ndarray | float:
    """
    Evaluate the orthonormal Hermite function of order n.

    Args:
        n: order, n >= 0
        x: dimensionless argument, scalar or array

    Returns:
        h_n(x), a float for scalar input and an array otherwise
    """
    if n < 0:
        raise ConfigurationError("Hermite order must be non-negative", data=n)
    x_arr = np.asarray(x, dtype=float)
    _, h, log_scale = _recurrence(n, np.atleast_1d(x_arr).copy())
    values = _unscale(h, log_scale).reshape(x_arr.shape)
    return _as_output(values, x)


def hermite_scaled_pair(n: int, x: ArrayLike) -> tuple:
    """
    (h_{n-1}(x), h_n(x)) from a single recurrence run; h_{-1} is zero.
    """
    if n < 0:
        raise ConfigurationError("Hermite order must be non-negative", data=n)
    x_arr = np.asarray(x, dtype=float)
    h_prev, h, log_scale = _recurrence(n, np.atleast_1d(x_arr).copy())
    previous = _unscale(h_prev, log_scale).reshape(x_arr.shape)
    current = _unscale(h, log_scale).reshape(x_arr.shape)
    return _as_output(previous, x), _as_output(current, x)
