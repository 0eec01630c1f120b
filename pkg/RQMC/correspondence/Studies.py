"""
Convergence of exact densities to their classical laws as n grows.

For every n: sample the exact density, coarse-grain it, coarse-grain the classical target
with the same window on the same grid, and take the L1 distance. Levels are independent
and go through the worker pool; the report is assembled in n order.
"""

from typing import Optional, Sequence

import numpy as np
from scipy.stats import linregress

from RQMC.core.PhysicalParams import PhysicalParams
from RQMC.core.StateSpec import StateSpec, SystemKind, Branch
from RQMC.core.Errors import ConfigurationError
from RQMC.spectra.Oscillator import oscillator_action, kappa_at
from RQMC.densities.DensityCurve import GridSpec
from RQMC.densities.Density import density_grid
from RQMC.correspondence.EnergyFixing import (
    TargetMode,
    classical_target,
)
from RQMC.correspondence.WindowPolicy import WindowPolicy
from RQMC.correspondence.CoarseGrain import coarse_grain, l1_distance
from RQMC.correspondence.CorrespondenceReport import (
    CorrespondenceReport,
    ReportEntry,
    ResidualScaling,
)
from RQMC.workers.WorkerPool import WorkerPool, DirectPool
from RQMC.logs.logging_config import get_logger

logger = get_logger(__name__)

MIN_LEVELS = 3


def _check_levels(n_values: Sequence[int]):
    if len(n_values) < MIN_LEVELS:
        raise ConfigurationError(f"A study needs at least {MIN_LEVELS} levels", data=list(n_values))
    if any(b <= a for a, b in zip(n_values, n_values[1:])):
        raise ConfigurationError("Levels must be strictly increasing", data=list(n_values))


def study_grid(
    state: StateSpec, params: PhysicalParams, window: float, x0: Optional[float] = None
) -> GridSpec:
    """
    Oscillators: +-(1.5 max(kappa, x0) + window), max(4001, 40n + 1) points.
    Boxes: [-0.1L, 1.1L], max(4001, 100n + 1) points.
    """
    if state.system.is_box:
        return GridSpec(
            x_min=-0.1 * params.length,
            x_max=1.1 * params.length,
            points=max(4001, 100 * state.n + 1),
        )
    radius = kappa_at(state.n + 0.5, params)
    if x0 is not None:
        radius = max(radius, x0)
    half = 1.5 * radius + window
    return GridSpec(x_min=-half, x_max=half, points=max(4001, 40 * state.n + 1))


def _coarse_distance(
    state: StateSpec,
    params: PhysicalParams,
    window: float,
    modes: Sequence[TargetMode],
) -> list[float]:
    targets = [classical_target(state, params, mode) for mode in modes]
    x0 = max(t.x0 for t in targets) if state.system.is_oscillator else None
    exact = density_grid(state, params, study_grid(state, params, window, x0))
    coarse = coarse_grain(exact, window)
    return [
        l1_distance(coarse, target.coarse_curve(exact.grid, window)) for target in targets
    ]


def _fit(xs: Sequence[float], ys: Sequence[float]) -> tuple[Optional[float], Optional[float]]:
    if any(v <= 0 for v in list(xs) + list(ys)):
        return None, None
    fit = linregress(np.log(xs), np.log(ys))
    return float(fit.slope), float(fit.stderr)


def convergence_study(
    system: SystemKind,
    n_values: Sequence[int],
    params: PhysicalParams,
    window: Optional[WindowPolicy] = None,
    branch: Branch = Branch.PARTICLE,
    target: TargetMode = TargetMode.KAPPA,
    pool: Optional[WorkerPool] = None,
) -> CorrespondenceReport:
    """
    Coarse-grained L1 distance to the classical law for each n.

    Args:
        system: any of the four systems
        n_values: strictly increasing levels, at least three
        params: physical constants
        window: coarse-graining policy (default widths when omitted)
        branch: particle or antiparticle
        target: arcsine at kappa of the fixing index (default), or at the amplitude
            from the energy fixing (oscillators)
        pool: worker pool for the per-n pipelines

    Returns:
        CorrespondenceReport; oscillator entries also carry the residual against the
        arcsine at kappa and S_n
    """
    n_values = list(n_values)
    _check_levels(n_values)
    window = window or WindowPolicy()
    pool = pool or DirectPool()
    logger.info(f"Convergence study: {system} ({branch}), n = {n_values}, target {target}")

    def run(n: int) -> ReportEntry:
        state = StateSpec(system=system, n=n, branch=branch)
        width = window.width_for(state, params)
        if system.is_oscillator:
            distance, residual = _coarse_distance(
                state, params, width, [target, TargetMode.KAPPA]
            )
            entry = ReportEntry(
                n=n,
                distance=distance,
                residual=residual,
                S=oscillator_action(n, params),
                window=width,
            )
        else:
            (distance,) = _coarse_distance(state, params, width, [target])
            entry = ReportEntry(n=n, distance=distance, window=width)
        logger.debug(f"n={n}: distance={entry.distance:.6e}")
        return entry

    entries = pool.map(run, n_values)
    distances = [entry.distance for entry in entries]
    if system.is_oscillator:
        exponent, stderr = _fit([e.S for e in entries], [e.residual for e in entries])
    else:
        exponent, stderr = _fit(n_values, distances)
    monotone = all(b < a for a, b in zip(distances, distances[1:]))
    logger.info(f"{system}: distances {['%.3e' % d for d in distances]}, monotone={monotone}")
    return CorrespondenceReport(
        system=system,
        branch=branch,
        target=target,
        params=params,
        entries=entries,
        exponent=exponent,
        exponent_stderr=stderr,
        monotone=monotone,
        window_policy=window,
    )


def residual_scaling(
    system: SystemKind,
    n_values: Sequence[int],
    params: PhysicalParams,
    window: Optional[WindowPolicy] = None,
    branch: Branch = Branch.PARTICLE,
    pool: Optional[WorkerPool] = None,
) -> ResidualScaling:
    """
    r_n = coarse L1 distance between the exact density and the arcsine at kappa, fitted
    as log r_n against log S_n.
    """
    if not system.is_oscillator:
        raise ConfigurationError("Residual scaling is defined for oscillators", data=str(system))
    n_values = list(n_values)
    _check_levels(n_values)
    window = window or WindowPolicy()
    pool = pool or DirectPool()

    def run(n: int) -> float:
        state = StateSpec(system=system, n=n, branch=branch)
        (residual,) = _coarse_distance(
            state, params, window.width_for(state, params), [TargetMode.KAPPA]
        )
        return residual

    residuals = pool.map(run, n_values)
    actions = [oscillator_action(n, params) for n in n_values]
    exponent, stderr = _fit(actions, residuals)
    logger.info(f"Residual scaling for {system}: slope {exponent} +- {stderr}")
    return ResidualScaling(
        system=system,
        n_values=n_values,
        residuals=residuals,
        actions=actions,
        exponent=exponent,
        exponent_stderr=stderr,
    )
