"""
Leading-order large-n densities: the classical law at kappa times the dilation factor
(Klein-Gordon) or mixed over the two components (Dirac oscillator), plus optional
correction terms from a CorrectionSeriesHook.
"""

import math
from typing import Optional

import numpy as np
from numpy.typing import ArrayLike

from RQMC.core.PhysicalParams import PhysicalParams
from RQMC.core.StateSpec import StateSpec, SystemKind
from RQMC.core.Errors import ConfigurationError
from RQMC.spectra.Spectrum import energy
from RQMC.spectra.Oscillator import oscillator_kappa
from RQMC.spectra.DiracBox import dirac_box_root, dirac_box_parameters
from RQMC.densities.DensityCurve import DensityCurve, GridSpec, CurveKind
from RQMC.densities.Density import default_range, density_support, norm_target
from RQMC.densities.Oscillator import dirac_oscillator_coefficients
from RQMC.correspondence.ClassicalDensity import classical_oscillator_density
from RQMC.correspondence.CorrectionSeriesHook import CorrectionSeriesHook


def _action_at(kappa: float, params: PhysicalParams) -> float:
    return 4.0 * math.sqrt(2.0 * math.pi) * params.mass * params.omega * kappa**2


def _arcsine_term(
    kappa: float, params: PhysicalParams, x: np.ndarray, hook: Optional[CorrectionSeriesHook]
) -> np.ndarray:
    values = np.asarray(classical_oscillator_density(kappa, x), dtype=float)
    if hook is not None:
        values = values + hook.correction(x, kappa, _action_at(kappa, params), params.hbar)
    return values


def kg_oscillator_asymptotic_density(
    state: StateSpec,
    params: PhysicalParams,
    x: ArrayLike,
    hook: Optional[CorrectionSeriesHook] = None,
) -> np.ndarray | float:
    """(|E_n|/mc^2) [1/(pi sqrt(kappa_n^2 - x^2)) + corrections]"""
    if state.system is not SystemKind.KG_OSCILLATOR:
        raise ConfigurationError("Expected a kg-oscillator state", data=str(state.system))
    x_arr = np.asarray(x, dtype=float)
    dilation = abs(energy(state, params)) / params.rest_energy
    kappa = oscillator_kappa(state.n, params, state.system)
    values = dilation * _arcsine_term(kappa, params, x_arr, hook)
    return float(values) if np.ndim(x) == 0 else values


def dirac_oscillator_asymptotic_density(
    state: StateSpec,
    params: PhysicalParams,
    x: ArrayLike,
    hook: Optional[CorrectionSeriesHook] = None,
) -> np.ndarray | float:
    """w * arcsine(kappa_n) + w' * arcsine(kappa_{n-1})"""
    x_arr = np.asarray(x, dtype=float)
    coefficients = dirac_oscillator_coefficients(state, params)
    values = coefficients.upper_weight * _arcsine_term(
        oscillator_kappa(state.n, params, state.system), params, x_arr, hook
    )
    if state.n > 0:
        values = values + coefficients.lower_weight * _arcsine_term(
            oscillator_kappa(state.n - 1, params, state.system), params, x_arr, hook
        )
    return float(values) if np.ndim(x) == 0 else values


def box_asymptotic_density(
    state: StateSpec, params: PhysicalParams, x: ArrayLike
) -> np.ndarray | float:
    """
    Flat average of the box densities on [0, L]: (|E_n|/mc^2)/L for kg-box and
    (1 + Phi^2) |B_k|^2 / 2 for dirac-box.
    """
    x_arr = np.asarray(x, dtype=float)
    match state.system:
        case SystemKind.KG_BOX:
            level = abs(energy(state, params)) / params.rest_energy / params.length
        case SystemKind.DIRAC_BOX:
            derived = dirac_box_parameters(dirac_box_root(state.n, params), params)
            level = 0.5 * (1.0 + derived.phi**2) * derived.b_squared
        case _:
            raise ConfigurationError("Expected a box state", data=str(state.system))
    values = np.where((x_arr >= 0.0) & (x_arr <= params.length), level, 0.0)
    return float(values) if np.ndim(x) == 0 else values


def asymptotic_density(
    state: StateSpec,
    params: PhysicalParams,
    x: ArrayLike,
    hook: Optional[CorrectionSeriesHook] = None,
) -> np.ndarray | float:
    match state.system:
        case SystemKind.KG_OSCILLATOR:
            return kg_oscillator_asymptotic_density(state, params, x, hook)
        case SystemKind.DIRAC_OSCILLATOR:
            return dirac_oscillator_asymptotic_density(state, params, x, hook)
        case SystemKind.KG_BOX | SystemKind.DIRAC_BOX:
            return box_asymptotic_density(state, params, x)


def asymptotic_density_grid(
    state: StateSpec,
    params: PhysicalParams,
    grid: Optional[GridSpec] = None,
    hook: Optional[CorrectionSeriesHook] = None,
) -> DensityCurve:
    """
    Sample the leading-order density on the same default grid as the exact one.

    Raises:
        DomainError: a grid point sits exactly on a turning point
    """
    grid = grid or GridSpec()
    xs = grid.resolve(*default_range(state, params))
    support = density_support(state, params)
    return DensityCurve(
        grid=xs,
        values=asymptotic_density(state, params, xs, hook),
        norm_target=norm_target(state, params),
        state=state,
        kind=CurveKind.ASYMPTOTIC,
        support=(support.lower, support.upper) if support.is_finite else None,
    )
