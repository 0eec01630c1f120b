import math
from typing import Optional

import numpy as np
from numpy.typing import ArrayLike

from RQMC.core.PhysicalParams import PhysicalParams, alpha
from RQMC.core.StateSpec import StateSpec, SystemKind
from RQMC.quadrature.Simpson import Support
from RQMC.spectra.Spectrum import spectrum_entry
from RQMC.spectra.Oscillator import oscillator_kappa
from RQMC.densities.DensityCurve import DensityCurve, GridSpec, CurveKind
from RQMC.densities.Oscillator import kg_oscillator_density, dirac_oscillator_density
from RQMC.densities.Box import kg_box_density, dirac_box_density
from RQMC.logs.logging_config import get_logger

logger = get_logger(__name__)


def density(state: StateSpec, params: PhysicalParams, x: ArrayLike) -> np.ndarray | float:
    """
    Exact relativistic density of any state at x.
    """
    match state.system:
        case SystemKind.KG_OSCILLATOR:
            return kg_oscillator_density(state, params, x)
        case SystemKind.KG_BOX:
            return kg_box_density(state, params, x)
        case SystemKind.DIRAC_OSCILLATOR:
            return dirac_oscillator_density(state, params, x)
        case SystemKind.DIRAC_BOX:
            return dirac_box_density(state, params, x)


def norm_target(state: StateSpec, params: PhysicalParams) -> float:
    """|E|/mc^2 for Klein-Gordon states, 1 for Dirac states."""
    if state.system.is_klein_gordon:
        return abs(spectrum_entry(state, params).energy) / params.rest_energy
    return 1.0


def density_support(state: StateSpec, params: PhysicalParams) -> Support:
    """
    Oscillators: the real line, with tails measured from kappa_n + 1/sqrt(alpha).
    Boxes: [0, L], split into n segments so each holds one oscillation of the density.
    """
    if state.system.is_oscillator:
        scale = oscillator_kappa(state.n, params, state.system) + 1.0 / math.sqrt(
            alpha(params)
        )
        return Support(scale=scale)
    length = params.length
    breakpoints = tuple(j * length / state.n for j in range(1, state.n))
    return Support(lower=0.0, upper=length, scale=length, breakpoints=breakpoints)


def default_range(state: StateSpec, params: PhysicalParams) -> tuple[float, float]:
    if state.system.is_oscillator:
        kappa = oscillator_kappa(state.n, params, state.system)
        half = 1.2 * kappa + 4.0 / math.sqrt(alpha(params))
        return -half, half
    return -0.1 * params.length, 1.1 * params.length


def density_grid(
    state: StateSpec,
    params: PhysicalParams,
    grid: Optional[GridSpec] = None,
) -> DensityCurve:
    """
    Sample the exact density.

    Args:
        state: which system, level and branch
        params: physical constants
        grid: range and point count; defaults per system, 2001 points

    Returns:
        DensityCurve with norm_target |E|/mc^2 (Klein-Gordon) or 1 (Dirac)
    """
    grid = grid or GridSpec()
    xs = grid.resolve(*default_range(state, params))
    support = density_support(state, params)
    curve = DensityCurve(
        grid=xs,
        values=density(state, params, xs),
        norm_target=norm_target(state, params),
        state=state,
        energy=spectrum_entry(state, params),
        kind=CurveKind.EXACT,
        support=(support.lower, support.upper) if support.is_finite else None,
    )
    logger.debug(f"Sampled {curve!r}")
    return curve


def integrate_density(state: StateSpec, params: PhysicalParams, rtol: float = 1e-10) -> float:
    """
    Normalization oracle: adaptive quadrature of the exact density over its support.
    """
    support = density_support(state, params)
    return float(support.integrate(lambda x: density(state, params, x), rtol=rtol))
