"""
Box densities. Both vanish outside [0, L]; the walls themselves take the inside value.
"""

import math

import numpy as np
from numpy.typing import ArrayLike

from RQMC.core.PhysicalParams import PhysicalParams
from RQMC.core.StateSpec import StateSpec, SystemKind
from RQMC.core.Errors import ConfigurationError
from RQMC.spectra.Energies import kg_box_energy
from RQMC.spectra.DiracBox import dirac_box_root, dirac_box_parameters


def _inside(x: np.ndarray, length: float) -> np.ndarray:
    return (x >= 0.0) & (x <= length)


def kg_box_density(
    state: StateSpec, params: PhysicalParams, x: ArrayLike
) -> np.ndarray | float:
    """(|E_n|/mc^2) (2/L) sin^2(n pi x / L) on [0, L]."""
    if state.system is not SystemKind.KG_BOX:
        raise ConfigurationError("Expected a kg-box state", data=str(state.system))
    x_arr = np.asarray(x, dtype=float)
    length = params.length
    dilation = abs(kg_box_energy(state.n, params)) / params.rest_energy
    inside = dilation * (2.0 / length) * np.sin(state.n * math.pi * x_arr / length) ** 2
    values = np.where(_inside(x_arr, length), inside, 0.0)
    return float(values) if np.ndim(x) == 0 else values


def dirac_box_density(
    state: StateSpec, params: PhysicalParams, x: ArrayLike
) -> np.ndarray | float:
    """
    |B_k|^2 [cos^2(kx - delta/2) + Phi^2 sin^2(kx - delta/2)] on [0, L], with k the
    n-th root of the quantization condition.
    """
    if state.system is not SystemKind.DIRAC_BOX:
        raise ConfigurationError("Expected a dirac-box state", data=str(state.system))
    x_arr = np.asarray(x, dtype=float)
    derived = dirac_box_parameters(dirac_box_root(state.n, params), params)
    phase = derived.k * x_arr - 0.5 * derived.delta
    inside = derived.b_squared * (
        np.cos(phase) ** 2 + derived.phi**2 * np.sin(phase) ** 2
    )
    values = np.where(_inside(x_arr, params.length), inside, 0.0)
    return float(values) if np.ndim(x) == 0 else values
