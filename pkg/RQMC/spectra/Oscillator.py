import math
from RQMC.core.PhysicalParams import PhysicalParams
from RQMC.core.StateSpec import SystemKind
from RQMC.core.Errors import ConfigurationError, DomainError


def kappa_at(level: float, params: PhysicalParams) -> float:
    """
    sqrt(2 hbar N / (m omega)) for a real index N > 0.
    """
    if not level > 0:
        raise DomainError("Turning-point radius needs a positive level index", data=level)
    return math.sqrt(2.0 * params.hbar * level / (params.mass * params.omega))


def oscillator_kappa(
    n: int, params: PhysicalParams, system: SystemKind = SystemKind.KG_OSCILLATOR
) -> float:
    """
    kappa_n = sqrt(2 hbar (n + 1/2) / (m omega)).

    The same formula serves the Dirac oscillator; its densities use kappa_n and kappa_{n-1}.
    """
    if not system.is_oscillator:
        raise ConfigurationError("kappa_n is defined for oscillators only", data=str(system))
    if n < 0:
        raise ConfigurationError("Oscillator level must be non-negative", data=n)
    return kappa_at(n + 0.5, params)


def oscillator_action(n: int, params: PhysicalParams) -> float:
    """S_n = 4 sqrt(2 pi) m omega kappa_n^2"""
    kappa = oscillator_kappa(n, params)
    return 4.0 * math.sqrt(2.0 * math.pi) * params.mass * params.omega * kappa**2
