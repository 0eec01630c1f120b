from typing import Iterable, Optional
import math

from RQMC.core.PhysicalParams import PhysicalParams
from RQMC.core.StateSpec import StateSpec, SystemKind, Branch
from RQMC.spectra.SpectrumEntry import SpectrumEntry
from RQMC.spectra.Energies import (
    kg_oscillator_energy,
    kg_box_energy,
    dirac_oscillator_energy,
)
from RQMC.spectra.Oscillator import oscillator_kappa, oscillator_action
from RQMC.spectra.DiracBox import (
    dirac_box_root,
    dirac_box_parameters,
    dirac_box_residual,
)
from RQMC.workers.WorkerPool import WorkerPool, DirectPool
from RQMC.logs.logging_config import get_logger

logger = get_logger(__name__)


def energy(state: StateSpec, params: PhysicalParams) -> float:
    """
    Branch-signed energy of any state.
    """
    match state.system:
        case SystemKind.KG_OSCILLATOR:
            return kg_oscillator_energy(state.n, params, state.branch)
        case SystemKind.KG_BOX:
            return kg_box_energy(state.n, params, state.branch)
        case SystemKind.DIRAC_OSCILLATOR:
            return dirac_oscillator_energy(state.n, params, state.branch)
        case SystemKind.DIRAC_BOX:
            k = dirac_box_root(state.n, params)
            return state.branch.sign * dirac_box_parameters(k, params).energy


def spectrum_entry(state: StateSpec, params: PhysicalParams) -> SpectrumEntry:
    match state.system:
        case SystemKind.KG_OSCILLATOR | SystemKind.DIRAC_OSCILLATOR:
            return SpectrumEntry(
                state=state,
                energy=energy(state, params),
                kappa=oscillator_kappa(state.n, params, state.system),
                action=oscillator_action(state.n, params),
            )
        case SystemKind.KG_BOX:
            return SpectrumEntry(
                state=state,
                energy=energy(state, params),
                k=state.n * math.pi / params.length,
            )
        case SystemKind.DIRAC_BOX:
            k = dirac_box_root(state.n, params)
            derived = dirac_box_parameters(k, params)
            return SpectrumEntry(
                state=state,
                energy=state.branch.sign * derived.energy,
                k=k,
                phi=derived.phi,
                delta=derived.delta,
                b_squared=derived.b_squared,
                residual=dirac_box_residual(k, params),
            )


def spectrum_table(
    system: SystemKind,
    n_values: Iterable[int],
    params: PhysicalParams,
    branch: Branch = Branch.PARTICLE,
    pool: Optional[WorkerPool] = None,
) -> list[SpectrumEntry]:
    """
    Spectrum entries for the requested levels, in the order given.
    """
    pool = pool or DirectPool()
    states = [StateSpec(system=system, n=n, branch=branch) for n in n_values]
    logger.info(f"Computing {len(states)} {system} levels ({branch})")
    return pool.map(lambda state: spectrum_entry(state, params), states)
