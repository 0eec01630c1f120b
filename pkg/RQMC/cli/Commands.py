"""
The sub-commands. Each takes a validated RunConfig and returns the rendered payload;
nothing is written here.
"""

from RQMC import __version__
from RQMC.core.StateSpec import SystemKind
from RQMC.spectra.Spectrum import spectrum_table
from RQMC.spectra.SpectrumEntry import SpectrumEntry
from RQMC.densities.Density import density_grid
from RQMC.fourier.Table import transform_table, default_p_grid
from RQMC.correspondence.Asymptotic import asymptotic_density_grid
from RQMC.correspondence.Studies import convergence_study
from RQMC.workers.WorkerPool import get_pool
from RQMC.cli.CommandRegistry import registry
from RQMC.cli.RunConfig import RunConfig, OutputFormat, DensityForm
from RQMC.cli.Writers import csv_text, json_text, UnitsBlock, ReportDocument
from RQMC.logs.logging_config import get_logger

logger = get_logger(__name__)


def _spectrum_columns(system: SystemKind) -> list[str]:
    match system:
        case SystemKind.KG_OSCILLATOR | SystemKind.DIRAC_OSCILLATOR:
            return ["n", "E", "kappa", "S"]
        case SystemKind.KG_BOX:
            return ["n", "E", "k"]
        case SystemKind.DIRAC_BOX:
            return ["n", "E", "k", "Phi", "delta", "Bsq", "residual"]


def _spectrum_row(entry: SpectrumEntry) -> dict:
    return {
        "n": entry.state.n,
        "E": entry.energy,
        "kappa": entry.kappa,
        "S": entry.action,
        "k": entry.k,
        "Phi": entry.phi,
        "delta": entry.delta,
        "Bsq": entry.b_squared,
        "residual": entry.residual,
    }


@registry.command
def cmd_spectrum(config: RunConfig) -> str:
    """
    Energy levels and derived spectral parameters.
    """
    entries = spectrum_table(
        config.system, config.spectrum_levels(), config.params, config.branch, get_pool()
    )
    columns = _spectrum_columns(config.system)
    rows = [[_spectrum_row(entry)[c] for c in columns] for entry in entries]
    if config.output_format is OutputFormat.CSV:
        return csv_text(columns, rows)
    return json_text(
        {
            "system": str(config.system),
            "branch": str(config.branch),
            "units": UnitsBlock.of(config.units, config.params).model_dump(),
            "entries": [dict(zip(columns, row)) for row in rows],
            "version": __version__,
        }
    )


@registry.command
def cmd_density(config: RunConfig) -> str:
    """
    Density of one state sampled on a grid (exact or leading asymptotic form).
    """
    state = config.state()
    if config.form is DensityForm.EXACT:
        curve = density_grid(state, config.params, config.grid)
    else:
        curve = asymptotic_density_grid(state, config.params, config.grid)
    logger.info(f"Sampled {curve!r}")
    if config.output_format is OutputFormat.CSV:
        return csv_text(["x", "rho"], zip(curve.grid.tolist(), curve.values.tolist()))
    entry = curve.energy
    return json_text(
        {
            "system": str(state.system),
            "n": state.n,
            "branch": str(state.branch),
            "form": str(config.form),
            "units": UnitsBlock.of(config.units, config.params).model_dump(),
            "norm_target": curve.norm_target,
            "energy": entry.energy if entry else None,
            "kappa": entry.kappa if entry else None,
            "x": curve.grid.tolist(),
            "rho": curve.values.tolist(),
            "version": __version__,
        }
    )


@registry.command
def cmd_ft(config: RunConfig) -> str:
    """
    Fourier coefficients: analytic, numeric-oracle and asymptotic forms side by side.
    """
    state = config.state()
    p_values = default_p_grid(config.p_max, config.p_points).tolist()
    samples = transform_table(state, config.params, p_values, get_pool())
    rows = [[s.p, s.real, s.imag, str(s.source)] for s in samples]
    if config.output_format is OutputFormat.CSV:
        return csv_text(["p", "re", "im", "source"], rows)
    return json_text(
        {
            "system": str(state.system),
            "n": state.n,
            "branch": str(state.branch),
            "units": UnitsBlock.of(config.units, config.params).model_dump(),
            "samples": [dict(zip(["p", "re", "im", "source"], row)) for row in rows],
            "version": __version__,
        }
    )


@registry.command
def cmd_converge(config: RunConfig) -> str:
    """
    Convergence study of coarse-grained densities towards the classical law.
    """
    report = convergence_study(
        config.system,
        config.n_values,
        config.params,
        window=config.window,
        branch=config.branch,
        target=config.target,
        pool=get_pool(),
    )
    document = ReportDocument.of(report, config.units, __version__)
    if config.output_format is OutputFormat.JSON:
        return json_text(document)
    return csv_text(
        ["n", "distance", "residual", "S"],
        [[row.n, row.distance, row.residual, row.S] for row in document.entries],
    )
