"""
Quadrature oracle for f(p) = int rho(x) exp(-i p x / hbar) dx.
"""

import math
from typing import Callable, Optional

import numpy as np
from scipy.integrate import trapezoid

from RQMC.core.PhysicalParams import PhysicalParams
from RQMC.core.StateSpec import StateSpec
from RQMC.core.Errors import ConfigurationError
from RQMC.quadrature.Simpson import Support, adaptive_simpson
from RQMC.densities.DensityCurve import DensityCurve
from RQMC.densities.Density import density, density_support


def ft_numeric(
    rho: DensityCurve | Callable[[np.ndarray], np.ndarray],
    p: float,
    params: PhysicalParams,
    support: Optional[Support] = None,
) -> complex:
    """
    Fourier coefficient of a sampled curve (trapezoid over its grid) or of a density
    closure (adaptive quadrature over `support`, the real line when omitted).

    Raises:
        QuadratureError: the adaptive quadrature did not converge
    """
    wave = p / params.hbar
    if isinstance(rho, DensityCurve):
        return complex(trapezoid(rho.values * np.exp(-1j * wave * rho.grid), rho.grid))
    support = support or Support()
    return complex(support.integrate(lambda x: rho(x) * np.exp(-1j * wave * x)))


def ft_numeric_state(state: StateSpec, params: PhysicalParams, p: float) -> complex:
    return ft_numeric(
        lambda x: density(state, params, x),
        p,
        params,
        support=density_support(state, params),
    )


def ft_numeric_classical(x0: float, p: float, params: PhysicalParams) -> complex:
    """
    Transform of the arcsine law on (-x0, x0). With x = x0 sin(theta) the density
    element becomes d theta / pi, which removes the endpoint singularities.
    """
    if not x0 > 0:
        raise ConfigurationError("Classical amplitude must be positive", data=x0)
    wave = p * x0 / params.hbar
    return complex(
        adaptive_simpson(
            lambda theta: np.exp(-1j * wave * np.sin(theta)) / math.pi,
            -0.5 * math.pi,
            0.5 * math.pi,
        )
    )
