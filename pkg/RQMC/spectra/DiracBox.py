"""
Dirac particle in a box: quantization condition tan(kL) = -hbar k / (mc) and the derived
parameters Phi_k, delta_k and |B_k|^2 of the density.

Roots are bracketed one per interval ((j - 1/2) pi / L, j pi / L) and found by bisection
on g(k) = mc sin(kL) + hbar k cos(kL), which has the same roots there and no poles.
"""

from functools import lru_cache
import math

import numpy as np
from pydantic import BaseModel, ConfigDict, Field
from scipy.optimize import bisect

from RQMC.core.PhysicalParams import PhysicalParams
from RQMC.core.Errors import ConfigurationError, RootFindingError, SingularParameterError
from RQMC.spectra.Energies import energy_from_wavenumber
from RQMC.logs.logging_config import get_logger

logger = get_logger(__name__)

MAX_ITERATIONS = 200
RELATIVE_TOLERANCE = 4 * np.finfo(float).eps


class DiracBoxParameters(BaseModel):
    model_config = ConfigDict(frozen=True)

    k: float = Field(..., gt=0)
    energy: float = Field(..., gt=0, description="E_k")
    phi: float = Field(..., ge=0, description="hbar k c / (E_k + mc^2)")
    delta: float = Field(..., description="arctan(2 Phi / (Phi^2 - 1)), principal branch")
    b_squared: float = Field(..., gt=0, description="|B_k|^2")


def _condition(k: float, params: PhysicalParams) -> float:
    kl = k * params.length
    return params.rest_momentum * math.sin(kl) + params.hbar * k * math.cos(kl)


def dirac_box_residual(k: float, params: PhysicalParams) -> float:
    """|tan(kL) + hbar k / (mc)|"""
    return abs(math.tan(k * params.length) + params.hbar * k / params.rest_momentum)


@lru_cache(maxsize=4096)
def _root(j: int, params: PhysicalParams) -> float:
    lower = (j - 0.5) * math.pi / params.length
    upper = j * math.pi / params.length
    root, result = bisect(
        _condition,
        lower,
        upper,
        args=(params,),
        xtol=1e-300,
        rtol=RELATIVE_TOLERANCE,
        maxiter=MAX_ITERATIONS,
        full_output=True,
        disp=False,
    )
    if not result.converged:
        raise RootFindingError(
            "Bisection did not converge in bracket",
            data={"j": j, "bracket": [lower, upper], "flag": result.flag},
        )
    logger.debug(f"dirac-box root j={j}: k={root!r} after {result.iterations} iterations")
    return root


def dirac_box_root(j: int, params: PhysicalParams) -> float:
    """
    The j-th positive root, j >= 1.
    """
    if j < 1:
        raise ConfigurationError("dirac-box root index must be >= 1", data=j)
    return _root(j, params)


def dirac_box_roots(params: PhysicalParams, count: int) -> list[float]:
    """
    The first `count` positive roots, strictly increasing.
    """
    if count < 1:
        raise ConfigurationError("Root count must be >= 1", data=count)
    return [dirac_box_root(j, params) for j in range(1, count + 1)]


def dirac_box_parameters(k: float, params: PhysicalParams) -> DiracBoxParameters:
    """
    Derived quantities at wave number k.

    |B_k|^2 is the inverse of the exact integral of the density over [0, L]:
        (1 + Phi^2) L / 2 + (1 - Phi^2) (sin(2kL - delta) + sin(delta)) / (4k)

    Raises:
        SingularParameterError: Phi_k == 1
    """
    if not k > 0:
        raise ConfigurationError("Wave number must be positive", data=k)
    energy = energy_from_wavenumber(k, params)
    phi = params.hbar * k * params.c / (energy + params.rest_energy)
    if phi == 1.0:
        raise SingularParameterError("delta_k is singular at Phi_k = 1", data=k)
    delta = math.atan(2.0 * phi / (phi**2 - 1.0))
    length = params.length
    inverse = (1.0 + phi**2) * length / 2.0 + (1.0 - phi**2) * (
        math.sin(2.0 * k * length - delta) + math.sin(delta)
    ) / (4.0 * k)
    return DiracBoxParameters(
        k=k, energy=energy, phi=phi, delta=delta, b_squared=1.0 / inverse
    )
