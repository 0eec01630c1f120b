from typing import Iterable, Optional

import numpy as np

from RQMC.core.PhysicalParams import PhysicalParams
from RQMC.core.StateSpec import StateSpec
from RQMC.core.Errors import ConfigurationError
from RQMC.spectra.Spectrum import energy
from RQMC.fourier.TransformSample import TransformSample, TransformSource
from RQMC.fourier.Numeric import ft_numeric_state
from RQMC.fourier.Analytic import analytic_ft, box_ft_asymptotic, oscillator_ft_bessel
from RQMC.workers.WorkerPool import WorkerPool, DirectPool
from RQMC.logs.logging_config import get_logger

logger = get_logger(__name__)


def default_p_grid(p_max: float = 5.0, points: int = 51) -> np.ndarray:
    """0, ..., p_max inclusive; the default steps by 0.1."""
    if points < 2:
        raise ConfigurationError("A momentum grid needs at least 2 points", data=points)
    if not p_max > 0:
        raise ConfigurationError("p_max must be positive", data=p_max)
    return np.linspace(0.0, p_max, points)


def _samples_at(state: StateSpec, params: PhysicalParams, p: float) -> list[TransformSample]:
    samples = []
    if state.system.is_oscillator:
        samples.append(
            TransformSample.of(p, analytic_ft(state, params, p), TransformSource.ANALYTIC)
        )
    samples.append(
        TransformSample.of(p, ft_numeric_state(state, params, p), TransformSource.NUMERIC)
    )
    if state.system.is_oscillator:
        asymptotic = oscillator_ft_bessel(state, params, p)
    else:
        asymptotic = box_ft_asymptotic(params, energy(state, params), p, state.system)
    samples.append(TransformSample.of(p, asymptotic, TransformSource.ASYMPTOTIC))
    return samples


def transform_table(
    state: StateSpec,
    params: PhysicalParams,
    p_values: Iterable[float],
    pool: Optional[WorkerPool] = None,
) -> list[TransformSample]:
    """
    Long-format table: for each p in order, the analytic (oscillators only),
    numeric-oracle and asymptotic samples.
    """
    pool = pool or DirectPool()
    p_values = [float(p) for p in p_values]
    logger.info(f"Transforming {state!r} at {len(p_values)} momenta")
    rows = pool.map(lambda p: _samples_at(state, params, p), p_values)
    return [sample for row in rows for sample in row]
