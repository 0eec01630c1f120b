from RQMC.densities.DensityCurve import DensityCurve, GridSpec, CurveKind
from RQMC.densities.Oscillator import (
    DiracOscillatorCoefficients,
    dirac_oscillator_coefficients,
    kg_oscillator_density,
    dirac_oscillator_density,
    gaussian_density,
)
from RQMC.densities.Box import kg_box_density, dirac_box_density
from RQMC.densities.Density import (
    density,
    norm_target,
    density_support,
    default_range,
    density_grid,
    integrate_density,
)

__all__ = [
    "DensityCurve",
    "GridSpec",
    "CurveKind",
    "DiracOscillatorCoefficients",
    "dirac_oscillator_coefficients",
    "kg_oscillator_density",
    "dirac_oscillator_density",
    "gaussian_density",
    "kg_box_density",
    "dirac_box_density",
    "density",
    "norm_target",
    "density_support",
    "default_range",
    "density_grid",
    "integrate_density",
]
