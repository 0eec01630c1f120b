import numpy as np
from numpy.typing import ArrayLike
from RQMC.core.Errors import ConfigurationError


def laguerre(n: int, x: ArrayLike) -> np.ndarray | float:
    """
    Laguerre polynomial L_n(x) from (k+1) L_{k+1} = (2k+1-x) L_k - k L_{k-1}.

    Computed unscaled; callers multiply by exp(-x/2) themselves.
    """
    if n < 0:
        raise ConfigurationError("Laguerre degree must be non-negative", data=n)
    x_arr = np.asarray(x, dtype=float)
    previous = np.zeros_like(x_arr)
    current = np.ones_like(x_arr)
    for k in range(n):
        previous, current = current, ((2 * k + 1 - x_arr) * current - k * previous) / (k + 1)
    return float(current) if np.ndim(x) == 0 else current
