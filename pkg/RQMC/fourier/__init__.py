from RQMC.fourier.TransformSample import TransformSample, TransformSource
from RQMC.fourier.Numeric import ft_numeric, ft_numeric_state, ft_numeric_classical
from RQMC.fourier.Analytic import (
    LaguerreArgument,
    kg_oscillator_ft,
    dirac_oscillator_ft,
    analytic_ft,
    box_ft_asymptotic,
    classical_oscillator_ft,
    oscillator_ft_bessel,
)
from RQMC.fourier.Table import transform_table, default_p_grid

__all__ = [
    "TransformSample",
    "TransformSource",
    "ft_numeric",
    "ft_numeric_state",
    "ft_numeric_classical",
    "LaguerreArgument",
    "kg_oscillator_ft",
    "dirac_oscillator_ft",
    "analytic_ft",
    "box_ft_asymptotic",
    "classical_oscillator_ft",
    "oscillator_ft_bessel",
    "transform_table",
    "default_p_grid",
]
