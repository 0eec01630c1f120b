import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from pydantic import ValidationError

from RQMC.core import PhysicalParams, StateSpec, SystemKind, Branch, ConfigurationError
from RQMC.spectra import (
    SpectrumEntry,
    kg_oscillator_energy,
    kg_box_energy,
    dirac_oscillator_energy,
    energy_from_wavenumber,
    oscillator_kappa,
    oscillator_action,
    dirac_box_root,
    dirac_box_roots,
    dirac_box_residual,
    dirac_box_parameters,
    energy,
    spectrum_entry,
    spectrum_table,
)
from RQMC.workers import ThreadPool


def test_kg_oscillator_energy(natural):
    assert kg_oscillator_energy(0, natural) == pytest.approx(math.sqrt(2))
    assert kg_oscillator_energy(0, natural, Branch.ANTIPARTICLE) == pytest.approx(-math.sqrt(2))
    assert kg_oscillator_energy(12, natural) == pytest.approx(math.sqrt(26))


def test_kg_box_energy(natural):
    assert kg_box_energy(1, natural) == pytest.approx(math.sqrt(1 + math.pi**2))
    assert kg_box_energy(1, natural) == pytest.approx(3.2969, abs=1e-4)
    assert kg_box_energy(2, natural) == pytest.approx(math.sqrt(1 + 4 * math.pi**2))
    assert kg_box_energy(1, natural, Branch.ANTIPARTICLE) == pytest.approx(
        -math.sqrt(1 + math.pi**2)
    )
    with pytest.raises(ConfigurationError):
        kg_box_energy(0, natural)


def test_dirac_oscillator_energy(natural):
    assert dirac_oscillator_energy(0, natural) == 1.0
    assert dirac_oscillator_energy(1, natural, Branch.ANTIPARTICLE) == pytest.approx(-math.sqrt(3))
    assert dirac_oscillator_energy(4, natural) == pytest.approx(3.0)


@pytest.mark.parametrize("n", [0, 1, 5, 10])
def test_non_relativistic_reduction(slow_light, n):
    mc2 = slow_light.rest_energy
    kg = abs(kg_oscillator_energy(n, slow_light)) - mc2
    assert kg == pytest.approx(n + 0.5, rel=1e-4)
    dirac = abs(dirac_oscillator_energy(n, slow_light)) - mc2
    assert dirac == pytest.approx(n, rel=1e-4, abs=1e-9)


@settings(max_examples=40, deadline=None)
@given(
    mass=st.floats(0.1, 10.0),
    omega=st.floats(0.1, 10.0),
    c=st.floats(0.5, 100.0),
    length=st.floats(0.1, 10.0),
)
def test_energies_increase_and_exceed_rest_energy(mass, omega, c, length):
    params = PhysicalParams(mass=mass, omega=omega, c=c, length=length)
    mc2 = params.rest_energy
    for levels in (
        [kg_oscillator_energy(n, params) for n in range(6)],
        [kg_box_energy(n, params) for n in range(1, 7)],
        [dirac_oscillator_energy(n, params) for n in range(6)],
    ):
        assert all(b > a for a, b in zip(levels, levels[1:]))
        assert all(e**2 >= mc2**2 * (1 - 1e-12) for e in levels)


def test_kappa_and_action(natural):
    assert oscillator_kappa(0, natural) == pytest.approx(1.0)
    assert oscillator_kappa(12, natural) == pytest.approx(5.0)
    assert oscillator_kappa(3, natural, SystemKind.DIRAC_OSCILLATOR) == oscillator_kappa(3, natural)
    assert oscillator_action(0, natural) == pytest.approx(4 * math.sqrt(2 * math.pi))
    assert oscillator_action(0, natural) == pytest.approx(10.0265, abs=1e-4)
    assert oscillator_action(12, natural) == pytest.approx(100 * math.sqrt(2 * math.pi))
    assert oscillator_action(2000, natural) / oscillator_action(1000, natural) == pytest.approx(
        2.0, rel=1e-3
    )
    with pytest.raises(ConfigurationError):
        oscillator_kappa(2, natural, SystemKind.KG_BOX)


def test_kappa_energy_identity():
    params = PhysicalParams(mass=1.3, omega=0.7, c=2.0)
    for n in range(101):
        e = kg_oscillator_energy(n, params)
        from_energy = math.sqrt(
            (e**2 - params.rest_energy**2) / (params.mass**2 * params.omega**2 * params.c**2)
        )
        assert from_energy == pytest.approx(oscillator_kappa(n, params), rel=1e-12)


def test_dirac_box_roots_bracketed(natural):
    roots = dirac_box_roots(natural, 6)
    assert all(b > a for a, b in zip(roots, roots[1:]))
    for j, k in enumerate(roots, start=1):
        assert (j - 0.5) * math.pi < k < j * math.pi
    for k in roots[:3]:
        assert dirac_box_residual(k, natural) < 1e-10
    assert math.pi / 2 < dirac_box_root(1, natural) < math.pi


def test_dirac_box_root_limits():
    heavy = PhysicalParams(mass=1e6)
    light = PhysicalParams(mass=1e-6)
    for j in (1, 2, 5):
        assert dirac_box_root(j, heavy) == pytest.approx(j * math.pi, abs=1e-4)
        offset = dirac_box_root(j, light) - (j - 0.5) * math.pi
        assert 0.0 < offset < 1e-5


def test_dirac_box_root_rejects_bad_index(natural):
    with pytest.raises(ConfigurationError):
        dirac_box_root(0, natural)
    with pytest.raises(ConfigurationError):
        dirac_box_roots(natural, 0)


def test_dirac_box_parameters(natural):
    k = dirac_box_root(1, natural)
    derived = dirac_box_parameters(k, natural)
    assert derived.energy == pytest.approx(energy_from_wavenumber(k, natural))
    assert 0.0 < derived.phi < 1.0
    assert derived.delta == pytest.approx(-2.0 * math.atan(derived.phi), rel=1e-12)
    assert derived.b_squared > 0.0

    tiny = dirac_box_parameters(1e-8, natural)
    assert tiny.phi < 1e-8
    with pytest.raises(ConfigurationError):
        dirac_box_parameters(0.0, natural)


def test_dirac_box_non_relativistic_limit(heavy):
    k = dirac_box_root(1, heavy)
    assert heavy.hbar * k / heavy.rest_momentum < 1e-2
    derived = dirac_box_parameters(k, heavy)
    assert derived.phi < 1e-2
    assert abs(derived.b_squared * heavy.length / 2.0 - 1.0) < 1e-3


def test_energy_dispatch(natural):
    assert energy(StateSpec(system=SystemKind.KG_BOX, n=2), natural) == kg_box_energy(2, natural)
    state = StateSpec(system=SystemKind.DIRAC_BOX, n=2, branch=Branch.ANTIPARTICLE)
    k = dirac_box_root(2, natural)
    assert energy(state, natural) == pytest.approx(-energy_from_wavenumber(k, natural))


def test_spectrum_entries(natural):
    oscillator = spectrum_entry(StateSpec(system=SystemKind.KG_OSCILLATOR, n=12), natural)
    assert oscillator.kappa == pytest.approx(5.0)
    assert oscillator.k is None

    box = spectrum_entry(StateSpec(system=SystemKind.KG_BOX, n=3), natural)
    assert box.k == pytest.approx(3 * math.pi)
    assert box.kappa is None

    dirac = spectrum_entry(StateSpec(system=SystemKind.DIRAC_BOX, n=1), natural)
    assert dirac.residual < 1e-10
    assert None not in (dirac.k, dirac.phi, dirac.delta, dirac.b_squared)


def test_spectrum_entry_rejects_wrong_sign():
    state = StateSpec(system=SystemKind.KG_BOX, n=1, branch=Branch.ANTIPARTICLE)
    with pytest.raises(ValidationError):
        SpectrumEntry(state=state, energy=3.0)


def test_spectrum_table_order_and_pool(natural):
    levels = [5, 1, 3]
    direct = spectrum_table(SystemKind.DIRAC_OSCILLATOR, levels, natural, Branch.ANTIPARTICLE)
    threaded = spectrum_table(
        SystemKind.DIRAC_OSCILLATOR, levels, natural, Branch.ANTIPARTICLE, ThreadPool(3)
    )
    assert [entry.state.n for entry in direct] == levels
    assert direct == threaded
    assert all(entry.energy < 0 for entry in direct)
