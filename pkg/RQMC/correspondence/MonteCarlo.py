import math
from typing import Optional

import numpy as np

from RQMC.core.PhysicalParams import PhysicalParams, natural_params
from RQMC.core.Errors import ConfigurationError


def sample_classical_oscillator(
    x0: float,
    size: int,
    rng: Optional[np.random.Generator] = None,
    params: Optional[PhysicalParams] = None,
) -> np.ndarray:
    """
    Positions x0 sin(omega t) of a classical oscillator observed at uniformly random
    times over one period. Their histogram follows the arcsine law.
    """
    if not x0 > 0:
        raise ConfigurationError("Classical amplitude must be positive", data=x0)
    if size < 1:
        raise ConfigurationError("Sample size must be positive", data=size)
    rng = rng or np.random.default_rng()
    params = params or natural_params()
    period = 2.0 * math.pi / params.omega
    times = rng.uniform(0.0, period, size)
    return x0 * np.sin(params.omega * times)
