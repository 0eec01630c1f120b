"""
Oscillator densities in scaled-Hermite form.

kg-oscillator:     (|E_n|/mc^2) sqrt(alpha) h_n(sqrt(alpha) x)^2
dirac-oscillator:  sqrt(alpha) [w h_n(sqrt(alpha) x)^2 + w' h_{n-1}(sqrt(alpha) x)^2]
with w = a_n^2/A_n^2 = (E + mc^2)/2E and w' = a'_n^2/A_{n-1}^2 = (E - mc^2)/2E.
"""

import math
from typing import Optional

import numpy as np
from numpy.typing import ArrayLike
from pydantic import BaseModel, ConfigDict, Field

from RQMC.core.PhysicalParams import PhysicalParams, alpha
from RQMC.core.StateSpec import StateSpec, SystemKind, Branch
from RQMC.core.Errors import ConfigurationError, DomainError
from RQMC.spectra.Energies import kg_oscillator_energy, dirac_oscillator_energy
from RQMC.specfun.Hermite import hermite_scaled, hermite_scaled_pair


def _check_system(state: StateSpec, system: SystemKind):
    if state.system is not system:
        raise ConfigurationError(f"Expected a {system} state", data=str(state.system))


def _check_finite(x: np.ndarray):
    if not np.all(np.isfinite(x)):
        raise DomainError("Density evaluated at a non-finite position")


def _as_output(values: np.ndarray, x: ArrayLike):
    return float(values) if np.ndim(x) == 0 else values


class DiracOscillatorCoefficients(BaseModel):
    """
    a_n^2, a'_n^2 and A_n^2 of the Dirac oscillator density.

    The normalizations sqrt(alpha/pi) / (2^n n!) are kept as logarithms, since 2^n n!
    leaves double range near n = 150; only the ratios (the weights) enter the density.
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=0)
    upper_weight: float = Field(..., ge=0, le=1, description="a_n^2 / A_n^2")
    lower_weight: float = Field(..., ge=0, le=1, description="a'_n^2 / A_{n-1}^2")
    log_norm_sq: float = Field(..., description="log A_n^2")
    log_norm_prev_sq: Optional[float] = Field(None, description="log A_{n-1}^2")

    @property
    def norm_sq(self) -> float:
        return math.exp(self.log_norm_sq)

    @property
    def a_sq(self) -> float:
        return self.upper_weight * self.norm_sq

    @property
    def a_prime_sq(self) -> float:
        if self.log_norm_prev_sq is None:
            return 0.0
        return self.lower_weight * math.exp(self.log_norm_prev_sq)


def _log_norm_sq(n: int, a: float) -> float:
    return 0.5 * math.log(a / math.pi) - n * math.log(2.0) - math.lgamma(n + 1)


def dirac_oscillator_coefficients(
    state: StateSpec, params: PhysicalParams
) -> DiracOscillatorCoefficients:
    """
    Component weights for a Dirac oscillator state.

    The branch-signed energy is used, so the antiparticle swaps the weights and its
    lower component dominates. n = 0 is the pure Gaussian on either branch.
    """
    _check_system(state, SystemKind.DIRAC_OSCILLATOR)
    a = alpha(params)
    if state.n == 0:
        return DiracOscillatorCoefficients(
            n=0, upper_weight=1.0, lower_weight=0.0, log_norm_sq=_log_norm_sq(0, a)
        )
    signed = dirac_oscillator_energy(state.n, params, state.branch)
    mc2 = params.rest_energy
    upper = (signed + mc2) / (2.0 * signed)
    return DiracOscillatorCoefficients(
        n=state.n,
        upper_weight=upper,
        lower_weight=1.0 - upper,
        log_norm_sq=_log_norm_sq(state.n, a),
        log_norm_prev_sq=_log_norm_sq(state.n - 1, a),
    )


def kg_oscillator_density(
    state: StateSpec, params: PhysicalParams, x: ArrayLike
) -> np.ndarray | float:
    _check_system(state, SystemKind.KG_OSCILLATOR)
    x_arr = np.asarray(x, dtype=float)
    _check_finite(x_arr)
    dilation = abs(kg_oscillator_energy(state.n, params)) / params.rest_energy
    root_alpha = math.sqrt(alpha(params))
    h = np.asarray(hermite_scaled(state.n, root_alpha * x_arr))
    return _as_output(dilation * root_alpha * h**2, x)


def dirac_oscillator_density(
    state: StateSpec, params: PhysicalParams, x: ArrayLike
) -> np.ndarray | float:
    x_arr = np.asarray(x, dtype=float)
    _check_finite(x_arr)
    coefficients = dirac_oscillator_coefficients(state, params)
    root_alpha = math.sqrt(alpha(params))
    previous, current = hermite_scaled_pair(state.n, root_alpha * x_arr)
    values = root_alpha * (
        coefficients.upper_weight * np.asarray(current) ** 2
        + coefficients.lower_weight * np.asarray(previous) ** 2
    )
    return _as_output(values, x)


def gaussian_density(params: PhysicalParams, x: ArrayLike) -> np.ndarray | float:
    """Normalized ground-state Gaussian sqrt(alpha/pi) exp(-alpha x^2)."""
    a = alpha(params)
    x_arr = np.asarray(x, dtype=float)
    return _as_output(math.sqrt(a / math.pi) * np.exp(-a * x_arr**2), x)
