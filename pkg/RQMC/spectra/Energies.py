"""
Closed-form energy levels. Every function returns E signed by branch.
"""

import math
from RQMC.core.PhysicalParams import PhysicalParams
from RQMC.core.StateSpec import Branch
from RQMC.core.Errors import ConfigurationError


def _check_n(n: int, minimum: int, system: str):
    if n < minimum:
        raise ConfigurationError(f"{system} requires n >= {minimum}", data=n)


def oscillator_energy_at(level: float, params: PhysicalParams) -> float:
    """
    |E| = sqrt(m^2c^4 + 2 N hbar omega m c^2) for a real level index N.
    Both oscillator spectra are this formula: N = n + 1/2 (Klein-Gordon), N = n (Dirac).
    """
    mc2 = params.rest_energy
    return math.sqrt(mc2**2 + 2.0 * level * params.hbar * params.omega * mc2)


def kg_oscillator_energy(
    n: int, params: PhysicalParams, branch: Branch = Branch.PARTICLE
) -> float:
    _check_n(n, 0, "kg-oscillator")
    return branch.sign * oscillator_energy_at(n + 0.5, params)


def kg_box_energy(
    n: int, params: PhysicalParams, branch: Branch = Branch.PARTICLE
) -> float:
    _check_n(n, 1, "kg-box")
    momentum = params.hbar * n * math.pi / params.length
    return branch.sign * math.hypot(params.rest_energy, momentum * params.c)


def dirac_oscillator_energy(
    n: int, params: PhysicalParams, branch: Branch = Branch.PARTICLE
) -> float:
    _check_n(n, 0, "dirac-oscillator")
    return branch.sign * oscillator_energy_at(n, params)


def energy_from_wavenumber(k: float, params: PhysicalParams) -> float:
    """E_k = sqrt(m^2c^4 + hbar^2 k^2 c^2) > 0."""
    return math.hypot(params.rest_energy, params.hbar * k * params.c)
