from RQMC.correspondence.ClassicalDensity import (
    ClassicalDensity,
    ClassicalKind,
    classical_oscillator_density,
    classical_box_density,
)
from RQMC.correspondence.EnergyFixing import (
    TargetMode,
    fixing_index,
    amplitude_from_energy,
    amplitude_from_state,
    quantum_number_from_amplitude,
    classical_target,
    branch_partner,
)
from RQMC.correspondence.WindowPolicy import WindowPolicy, WindowKind
from RQMC.correspondence.CoarseGrain import coarse_grain, l1_distance, total_variation
from RQMC.correspondence.CorrespondenceReport import (
    CorrespondenceReport,
    ReportEntry,
    ResidualScaling,
)
from RQMC.correspondence.Studies import convergence_study, residual_scaling, study_grid
from RQMC.correspondence.CorrectionSeriesHook import CorrectionSeriesHook
from RQMC.correspondence.Asymptotic import (
    kg_oscillator_asymptotic_density,
    dirac_oscillator_asymptotic_density,
    box_asymptotic_density,
    asymptotic_density,
    asymptotic_density_grid,
)
from RQMC.correspondence.MonteCarlo import sample_classical_oscillator

__all__ = [
    "ClassicalDensity",
    "ClassicalKind",
    "classical_oscillator_density",
    "classical_box_density",
    "TargetMode",
    "fixing_index",
    "amplitude_from_energy",
    "amplitude_from_state",
    "quantum_number_from_amplitude",
    "classical_target",
    "branch_partner",
    "WindowPolicy",
    "WindowKind",
    "coarse_grain",
    "l1_distance",
    "total_variation",
    "CorrespondenceReport",
    "ReportEntry",
    "ResidualScaling",
    "convergence_study",
    "residual_scaling",
    "study_grid",
    "CorrectionSeriesHook",
    "kg_oscillator_asymptotic_density",
    "dirac_oscillator_asymptotic_density",
    "box_asymptotic_density",
    "asymptotic_density",
    "asymptotic_density_grid",
    "sample_classical_oscillator",
]
