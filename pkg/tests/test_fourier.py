import math

import numpy as np
import pytest
from scipy.integrate import quad

from RQMC.core import StateSpec, SystemKind, Branch, ConfigurationError
from RQMC.spectra import energy, dirac_box_root, dirac_box_parameters, oscillator_kappa
from RQMC.specfun import bessel_j0
from RQMC.densities import density, norm_target, density_grid, GridSpec
from RQMC.workers.WorkerPool import ThreadPool
from RQMC.fourier import (
    TransformSample,
    TransformSource,
    ft_numeric,
    ft_numeric_state,
    ft_numeric_classical,
    LaguerreArgument,
    kg_oscillator_ft,
    dirac_oscillator_ft,
    analytic_ft,
    box_ft_asymptotic,
    classical_oscillator_ft,
    oscillator_ft_bessel,
    transform_table,
    default_p_grid,
)

MOMENTA = np.linspace(0.1, 5.0, 50)


def _state(system: SystemKind, n: int, branch: Branch = Branch.PARTICLE) -> StateSpec:
    return StateSpec(system=system, n=n, branch=branch)


@pytest.mark.parametrize("system", list(SystemKind))
def test_zero_momentum_is_norm_target(natural, system):
    state = _state(system, 3)
    value = ft_numeric_state(state, natural, 0.0)
    assert value.real == pytest.approx(norm_target(state, natural), rel=1e-9)
    assert abs(value.imag) < 1e-12


def test_kg_box_against_scipy_quad(natural):
    state = _state(SystemKind.KG_BOX, 1)
    p = math.pi
    real, _ = quad(lambda x: density(state, natural, x) * math.cos(p * x), 0.0, 1.0, epsabs=1e-13)
    imag, _ = quad(lambda x: -density(state, natural, x) * math.sin(p * x), 0.0, 1.0, epsabs=1e-13)
    value = ft_numeric_state(state, natural, p)
    assert value.real == pytest.approx(real, abs=1e-10)
    assert value.imag == pytest.approx(imag, abs=1e-10)


def test_oscillator_transforms_are_real(natural):
    for system in (SystemKind.KG_OSCILLATOR, SystemKind.DIRAC_OSCILLATOR):
        for p in (0.5, 2.0, 4.5):
            assert abs(ft_numeric_state(_state(system, 4), natural, p).imag) < 1e-10


@pytest.mark.parametrize("n", [0, 3, 10, 20])
def test_kg_oscillator_closed_form(natural, n):
    state = _state(SystemKind.KG_OSCILLATOR, n)
    for p in MOMENTA:
        numeric = ft_numeric_state(state, natural, p)
        assert abs(kg_oscillator_ft(n, natural, p) - numeric.real) < 1e-8


@pytest.mark.parametrize("n", [1, 5, 20])
@pytest.mark.parametrize("branch", list(Branch))
def test_dirac_oscillator_closed_form(natural, n, branch):
    state = _state(SystemKind.DIRAC_OSCILLATOR, n, branch)
    for p in MOMENTA:
        numeric = ft_numeric_state(state, natural, p)
        assert abs(dirac_oscillator_ft(n, natural, p, branch) - numeric.real) < 1e-8


def test_printed_laguerre_argument_disagrees(natural):
    state = _state(SystemKind.KG_OSCILLATOR, 3)
    worst = max(
        abs(
            analytic_ft(state, natural, p, LaguerreArgument.PRINTED)
            - ft_numeric_state(state, natural, p).real
        )
        for p in MOMENTA
    )
    assert worst > 1e-8


def test_closed_form_special_values(natural):
    for p in (0.0, 0.7, 3.0):
        assert dirac_oscillator_ft(0, natural, p) == pytest.approx(math.exp(-(p**2) / 4.0))
    assert kg_oscillator_ft(7, natural, 0.0) == pytest.approx(4.0)
    with pytest.raises(ConfigurationError):
        analytic_ft(_state(SystemKind.KG_BOX, 2), natural, 1.0)


def test_box_asymptotic_tracks_numeric(natural):
    state = _state(SystemKind.KG_BOX, 50)
    e = energy(state, natural)
    for p in np.linspace(-5.0, 5.0, 21):
        asymptotic = box_ft_asymptotic(natural, e, p, SystemKind.KG_BOX)
        assert abs(asymptotic - ft_numeric_state(state, natural, p)) < 0.02 * abs(e)

    def gap(n: int) -> float:
        low = _state(SystemKind.KG_BOX, n)
        return abs(
            box_ft_asymptotic(natural, energy(low, natural), 3.0, SystemKind.KG_BOX)
            - ft_numeric_state(low, natural, 3.0)
        )

    assert gap(10) > gap(50)


def test_box_asymptotic_limits(natural):
    kg = energy(_state(SystemKind.KG_BOX, 4), natural)
    assert box_ft_asymptotic(natural, kg, 0.0, SystemKind.KG_BOX) == pytest.approx(abs(kg))

    dirac_state = _state(SystemKind.DIRAC_BOX, 4)
    dirac = energy(dirac_state, natural)
    derived = dirac_box_parameters(dirac_box_root(4, natural), natural)
    expected = (1 + derived.phi**2) * derived.b_squared * natural.length / 2
    assert box_ft_asymptotic(natural, dirac, 0.0, SystemKind.DIRAC_BOX).real == pytest.approx(
        expected, rel=1e-9
    )
    for p in (0.3, 1.7, 4.0):
        forward = box_ft_asymptotic(natural, kg, p, SystemKind.KG_BOX)
        backward = box_ft_asymptotic(natural, kg, -p, SystemKind.KG_BOX)
        assert abs(forward) == pytest.approx(abs(backward))

    with pytest.raises(ConfigurationError):
        box_ft_asymptotic(natural, 0.5, 1.0, SystemKind.DIRAC_BOX)
    with pytest.raises(ConfigurationError):
        box_ft_asymptotic(natural, kg, 1.0, SystemKind.KG_OSCILLATOR)


def test_classical_transform(natural):
    for x0 in (0.5, 2.0, 7.5):
        for p in (0.0, 0.9, 4.2):
            numeric = ft_numeric_classical(x0, p, natural)
            assert classical_oscillator_ft(x0, p, natural) == pytest.approx(numeric.real, abs=1e-6)
            assert abs(numeric.imag) < 1e-12
    with pytest.raises(ConfigurationError):
        classical_oscillator_ft(0.0, 1.0, natural)
    with pytest.raises(ConfigurationError):
        ft_numeric_classical(-1.0, 1.0, natural)


def test_bessel_form_weights(natural):
    kg = _state(SystemKind.KG_OSCILLATOR, 30)
    assert oscillator_ft_bessel(kg, natural, 0.0) == pytest.approx(norm_target(kg, natural))
    dirac = _state(SystemKind.DIRAC_OSCILLATOR, 30, Branch.ANTIPARTICLE)
    assert oscillator_ft_bessel(dirac, natural, 0.0) == pytest.approx(1.0)
    with pytest.raises(ConfigurationError):
        oscillator_ft_bessel(_state(SystemKind.DIRAC_BOX, 3), natural, 1.0)


def _bessel_gap(n: int, params) -> float:
    kappa = oscillator_kappa(n, params)
    dilation = abs(energy(_state(SystemKind.KG_OSCILLATOR, n), params)) / params.rest_energy
    scaled = np.linspace(0.0, 10.0, 401)
    gaps = [
        abs(kg_oscillator_ft(n, params, y * params.hbar / kappa) / dilation - bessel_j0(y))
        for y in scaled
    ]
    return max(gaps)


def test_kg_oscillator_transform_approaches_bessel(natural):
    gaps = [_bessel_gap(n, natural) for n in (10, 50, 100)]
    assert gaps[0] > gaps[1] > gaps[2]
    assert gaps[2] < 0.02


def test_kg_oscillator_transform_at_bessel_argument_five(natural):
    n = 100
    dilation = abs(energy(_state(SystemKind.KG_OSCILLATOR, n), natural)) / natural.rest_energy
    p = 5.0 * natural.hbar / oscillator_kappa(n, natural)
    assert abs(kg_oscillator_ft(n, natural, p) - dilation * bessel_j0(5.0)) < 0.02 * dilation
    assert oscillator_ft_bessel(
        _state(SystemKind.KG_OSCILLATOR, n), natural, p
    ) == pytest.approx(dilation * bessel_j0(5.0))


def test_sampled_curve_transform(natural):
    state = _state(SystemKind.KG_OSCILLATOR, 2)
    curve = density_grid(state, natural, GridSpec(points=4001))
    for p in (0.0, 1.5):
        assert ft_numeric(curve, p, natural) == pytest.approx(
            ft_numeric_state(state, natural, p), abs=1e-6
        )


def test_transform_table_layout(natural):
    p_values = [0.0, 0.5, 1.0]
    oscillator = transform_table(_state(SystemKind.KG_OSCILLATOR, 3), natural, p_values)
    assert len(oscillator) == 9
    assert [s.source for s in oscillator[:3]] == [
        TransformSource.ANALYTIC,
        TransformSource.NUMERIC,
        TransformSource.ASYMPTOTIC,
    ]
    assert [s.p for s in oscillator[::3]] == p_values

    box = transform_table(_state(SystemKind.DIRAC_BOX, 3), natural, p_values)
    assert len(box) == 6
    assert {s.source for s in box} == {TransformSource.NUMERIC, TransformSource.ASYMPTOTIC}

    threaded = transform_table(
        _state(SystemKind.KG_OSCILLATOR, 3), natural, p_values, pool=ThreadPool(max_workers=3)
    )
    assert threaded == oscillator


def test_default_p_grid():
    grid = default_p_grid()
    assert grid.size == 51 and grid[0] == 0.0 and grid[-1] == 5.0
    assert grid[1] == pytest.approx(0.1)
    with pytest.raises(ConfigurationError):
        default_p_grid(points=1)
    with pytest.raises(ConfigurationError):
        default_p_grid(p_max=0.0)


def test_transform_sample():
    sample = TransformSample.of(1.0, 2.0 - 3.0j, TransformSource.NUMERIC)
    assert sample.value == 2.0 - 3.0j
    assert str(sample.source) == "numeric-oracle"
