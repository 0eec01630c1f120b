from RQMC.spectra.SpectrumEntry import SpectrumEntry
from RQMC.spectra.Energies import (
    kg_oscillator_energy,
    kg_box_energy,
    dirac_oscillator_energy,
    oscillator_energy_at,
    energy_from_wavenumber,
)
from RQMC.spectra.Oscillator import oscillator_kappa, oscillator_action, kappa_at
from RQMC.spectra.DiracBox import (
    DiracBoxParameters,
    dirac_box_root,
    dirac_box_roots,
    dirac_box_residual,
    dirac_box_parameters,
)
from RQMC.spectra.Spectrum import energy, spectrum_entry, spectrum_table

__all__ = [
    "SpectrumEntry",
    "kg_oscillator_energy",
    "kg_box_energy",
    "dirac_oscillator_energy",
    "oscillator_energy_at",
    "energy_from_wavenumber",
    "oscillator_kappa",
    "oscillator_action",
    "kappa_at",
    "DiracBoxParameters",
    "dirac_box_root",
    "dirac_box_roots",
    "dirac_box_residual",
    "dirac_box_parameters",
    "energy",
    "spectrum_entry",
    "spectrum_table",
]
