"""
Closed-form and asymptotic Fourier coefficients, convention f(p) = int rho e^{-ipx/hbar} dx.

The oscillator forms take the Laguerre argument p^2 / (2 m omega hbar). The
LaguerreArgument.PRINTED variant, p / (2 m omega hbar), is kept only so the two readings
can be compared against the quadrature oracle.
"""

import math
from enum import Enum

import numpy as np

from RQMC.core.PhysicalParams import PhysicalParams
from RQMC.core.StateSpec import StateSpec, SystemKind, Branch
from RQMC.core.Errors import ConfigurationError
from RQMC.specfun.Laguerre import laguerre
from RQMC.specfun.Bessel import bessel_j0
from RQMC.spectra.Energies import kg_oscillator_energy
from RQMC.spectra.DiracBox import dirac_box_parameters
from RQMC.spectra.Oscillator import oscillator_kappa
from RQMC.densities.Oscillator import dirac_oscillator_coefficients


class LaguerreArgument(str, Enum):
    SQUARED = "squared"
    PRINTED = "printed"

    def __str__(self) -> str:
        return self.value


def _gaussian_and_argument(
    p: float, params: PhysicalParams, argument: LaguerreArgument
) -> tuple[float, float]:
    scale = params.mass * params.omega * params.hbar
    gaussian = math.exp(-(p**2) / (4.0 * scale))
    match argument:
        case LaguerreArgument.SQUARED:
            return gaussian, p**2 / (2.0 * scale)
        case LaguerreArgument.PRINTED:
            return gaussian, p / (2.0 * scale)


def kg_oscillator_ft(
    n: int,
    params: PhysicalParams,
    p: float,
    argument: LaguerreArgument = LaguerreArgument.SQUARED,
) -> float:
    """
    (|E_n|/mc^2) exp(-p^2/(4 m omega hbar)) L_n(p^2/(2 m omega hbar))
    """
    dilation = abs(kg_oscillator_energy(n, params)) / params.rest_energy
    gaussian, q = _gaussian_and_argument(p, params, argument)
    return dilation * gaussian * laguerre(n, q)


def dirac_oscillator_ft(
    n: int,
    params: PhysicalParams,
    p: float,
    branch: Branch = Branch.PARTICLE,
    argument: LaguerreArgument = LaguerreArgument.SQUARED,
) -> float:
    """
    exp(-p^2/(4 m omega hbar)) [w L_n(q) + w' L_{n-1}(q)], q = p^2/(2 m omega hbar).
    n = 0 is the Gaussian transform alone.
    """
    coefficients = dirac_oscillator_coefficients(
        StateSpec(system=SystemKind.DIRAC_OSCILLATOR, n=n, branch=branch), params
    )
    gaussian, q = _gaussian_and_argument(p, params, argument)
    if n == 0:
        return gaussian
    return gaussian * (
        coefficients.upper_weight * laguerre(n, q)
        + coefficients.lower_weight * laguerre(n - 1, q)
    )


def analytic_ft(
    state: StateSpec,
    params: PhysicalParams,
    p: float,
    argument: LaguerreArgument = LaguerreArgument.SQUARED,
) -> float:
    """
    Exact closed form; defined for the oscillators only.
    """
    match state.system:
        case SystemKind.KG_OSCILLATOR:
            return kg_oscillator_ft(state.n, params, p, argument)
        case SystemKind.DIRAC_OSCILLATOR:
            return dirac_oscillator_ft(state.n, params, p, state.branch, argument)
        case _:
            raise ConfigurationError(
                "No closed-form transform for box systems; use box_ft_asymptotic",
                data=str(state.system),
            )


def box_ft_asymptotic(
    params: PhysicalParams, energy: float, p: float, system: SystemKind
) -> complex:
    """
    Large-n transform of a box density, i.e. of its flat average over [0, L].

    kg-box:    (|E|/mc^2) (i hbar / (p L)) (exp(-i L p / hbar) - 1)
    dirac-box: (1 + Phi^2) |B|^2 (i hbar / (2p)) (exp(-i L p / hbar) - 1)

    At p = 0 the limits |E|/mc^2 and (1 + Phi^2) |B|^2 L / 2 are returned.
    """
    length = params.length
    match system:
        case SystemKind.KG_BOX:
            prefactor = abs(energy) / params.rest_energy / length
        case SystemKind.DIRAC_BOX:
            momentum_sq = (energy / params.c) ** 2 - params.rest_momentum**2
            if not momentum_sq > 0:
                raise ConfigurationError("dirac-box energy must exceed mc^2", data=energy)
            derived = dirac_box_parameters(math.sqrt(momentum_sq) / params.hbar, params)
            prefactor = (1.0 + derived.phi**2) * derived.b_squared / 2.0
        case _:
            raise ConfigurationError("Expected a box system", data=str(system))
    if p == 0:
        return complex(prefactor * length)
    return prefactor * (1j * params.hbar / p) * (np.exp(-1j * length * p / params.hbar) - 1.0)


def classical_oscillator_ft(x0: float, p: float, params: PhysicalParams) -> float:
    """Transform of the arcsine law: J0(x0 p / hbar)."""
    if not x0 > 0:
        raise ConfigurationError("Classical amplitude must be positive", data=x0)
    return bessel_j0(x0 * p / params.hbar)


def oscillator_ft_bessel(state: StateSpec, params: PhysicalParams, p: float) -> float:
    """
    Large-n form of the oscillator transforms: the Bessel transform of the arcsine law
    at kappa, carrying the dilation (kg) or the component weights (Dirac).
    """
    match state.system:
        case SystemKind.KG_OSCILLATOR:
            dilation = abs(kg_oscillator_energy(state.n, params)) / params.rest_energy
            kappa = oscillator_kappa(state.n, params, state.system)
            return dilation * classical_oscillator_ft(kappa, p, params)
        case SystemKind.DIRAC_OSCILLATOR:
            coefficients = dirac_oscillator_coefficients(state, params)
            value = coefficients.upper_weight * classical_oscillator_ft(
                oscillator_kappa(state.n, params, state.system), p, params
            )
            if state.n > 0:
                value += coefficients.lower_weight * classical_oscillator_ft(
                    oscillator_kappa(state.n - 1, params, state.system), p, params
                )
            return value
        case _:
            raise ConfigurationError("Expected an oscillator system", data=str(state.system))
