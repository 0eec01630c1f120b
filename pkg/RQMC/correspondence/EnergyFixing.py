"""
Energy fixing: the classical amplitude whose energy mc^2 + m omega^2 x0^2 / 2 equals the
relativistic level, and its inverse.

Both oscillator spectra are |E_N| = sqrt(m^2c^4 + 2 N hbar omega m c^2) at a fixing index
N: n + 1/2 for Klein-Gordon, n + 1/2 (particle) or n - 1/2 (antiparticle) for Dirac.
"""

import math
from enum import Enum

from RQMC.core.PhysicalParams import PhysicalParams
from RQMC.core.StateSpec import StateSpec, SystemKind, Branch
from RQMC.core.Errors import ConfigurationError, DomainError
from RQMC.spectra.Oscillator import kappa_at
from RQMC.spectra.Spectrum import energy as signed_energy
from RQMC.correspondence.ClassicalDensity import ClassicalDensity


class TargetMode(str, Enum):
    AMPLITUDE = "amplitude"  # arcsine at x0 from the energy fixing
    KAPPA = "kappa"  # arcsine at sqrt(2 hbar N / (m omega))

    def __str__(self) -> str:
        return self.value


def _require_oscillator(system: SystemKind):
    if not system.is_oscillator:
        raise ConfigurationError("Energy fixing applies to oscillators only", data=str(system))


def fixing_index(state: StateSpec) -> float:
    _require_oscillator(state.system)
    if state.system is SystemKind.KG_OSCILLATOR:
        return state.n + 0.5
    return state.n + 0.5 * state.branch.sign


def _kinetic_energy(level: float, params: PhysicalParams) -> float:
    """|E_N| - mc^2 without cancellation."""
    mc2 = params.rest_energy
    shift = 2.0 * level * params.hbar * params.omega * mc2
    return shift / (math.sqrt(mc2**2 + shift) + mc2)


def amplitude_from_energy(energy: float, params: PhysicalParams) -> float:
    """
    x0 = sqrt(2 (|E| - mc^2) / (m omega^2)).

    Raises:
        DomainError: |E| <= mc^2 (no classical motion)
    """
    excess = abs(energy) - params.rest_energy
    if not excess > 0:
        raise DomainError("Zero classical amplitude: |E| does not exceed mc^2", data=energy)
    return math.sqrt(2.0 * excess / (params.mass * params.omega**2))


def amplitude_from_state(state: StateSpec, params: PhysicalParams) -> float:
    """
    Classical amplitude fixed by the state's energy at its fixing index.

    Raises:
        DomainError: the state sits at |E| = mc^2 (dirac-oscillator n = 0, either branch)
            or its fixing index is not positive
    """
    level = fixing_index(state)
    if not abs(signed_energy(state, params)) > params.rest_energy:
        raise DomainError("Zero classical amplitude: |E| equals mc^2", data=state.n)
    if not level > 0:
        raise DomainError("Zero classical amplitude at fixing index", data=level)
    return math.sqrt(2.0 * _kinetic_energy(level, params) / (params.mass * params.omega**2))


def quantum_number_from_amplitude(
    x0: float,
    params: PhysicalParams,
    system: SystemKind,
    branch: Branch = Branch.PARTICLE,
) -> int:
    """
    Invert the energy fixing: solve |E_N| = mc^2 + m omega^2 x0^2 / 2 for N, undo the
    fixing shift and round to the nearest level.

    Raises:
        DomainError: the level is below the system minimum
    """
    _require_oscillator(system)
    if not x0 > 0:
        raise ConfigurationError("Classical amplitude must be positive", data=x0)
    kinetic = 0.5 * params.mass * params.omega**2 * x0**2
    mc2 = params.rest_energy
    # E^2 - m^2c^4 = K (K + 2 mc^2)
    level = kinetic * (kinetic + 2.0 * mc2) / (2.0 * params.hbar * params.omega * mc2)
    if system is SystemKind.KG_OSCILLATOR:
        shift = 0.5
    else:
        shift = 0.5 * branch.sign
    n = round(level - shift)
    if n < system.minimum_n:
        raise DomainError(f"Amplitude maps below the lowest {system} level", data=n)
    return n


def classical_target(
    state: StateSpec,
    params: PhysicalParams,
    mode: TargetMode = TargetMode.KAPPA,
) -> ClassicalDensity:
    """
    The classical law a state converges to: uniform on [0, L] for boxes, arcsine for
    oscillators at kappa_N (KAPPA) or at the energy-fixed amplitude (AMPLITUDE).
    """
    if state.system.is_box:
        return ClassicalDensity.uniform(params.length)
    match mode:
        case TargetMode.AMPLITUDE:
            return ClassicalDensity.arcsine(amplitude_from_state(state, params))
        case TargetMode.KAPPA:
            return ClassicalDensity.arcsine(kappa_at(fixing_index(state), params))


def branch_partner(state: StateSpec) -> StateSpec:
    """
    The opposite-branch state with the same classical energy: the same n for
    Klein-Gordon and boxes, n + 1 for a Dirac oscillator particle, n - 1 for an antiparticle.
    """
    partner = state.branch.opposite
    if state.system is not SystemKind.DIRAC_OSCILLATOR:
        return StateSpec(system=state.system, n=state.n, branch=partner)
    n = state.n + 1 if state.branch is Branch.PARTICLE else state.n - 1
    if n < 0:
        raise DomainError("dirac-oscillator antiparticle n = 0 has no partner", data=state.n)
    return StateSpec(system=state.system, n=n, branch=partner)
