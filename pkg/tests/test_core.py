import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from pydantic import ValidationError

from RQMC.core import (
    PhysicalParams,
    natural_params,
    alpha,
    StateSpec,
    SystemKind,
    Branch,
    UnitSystem,
    UnitMode,
    ErrorCode,
    ConfigurationError,
    NumericalError,
    DomainError,
    RootFindingError,
)

positive = st.floats(min_value=1e-3, max_value=1e3, allow_nan=False, allow_infinity=False)


def test_natural_params():
    params = natural_params()
    assert (params.mass, params.omega, params.hbar, params.c, params.length) == (1, 1, 1, 1, 1)
    assert alpha(params) == 1.0


@pytest.mark.parametrize(
    "mass, omega, hbar, expected",
    [(1.0, 1.0, 1.0, 1.0), (2.0, 3.0, 1.0, 6.0), (1.0, 1.0, 2.0, 0.5)],
)
def test_alpha(mass, omega, hbar, expected):
    assert alpha(PhysicalParams(mass=mass, omega=omega, hbar=hbar)) == pytest.approx(expected)


@pytest.mark.parametrize("field", ["mass", "omega", "length", "hbar", "c"])
@pytest.mark.parametrize("value", [0.0, -1.0, float("inf"), float("nan")])
def test_physical_params_reject_non_positive(field, value):
    with pytest.raises(ValidationError):
        PhysicalParams(**{field: value})


def test_physical_params_are_frozen_and_hashable():
    params = natural_params()
    with pytest.raises(ValidationError):
        params.mass = 2.0
    assert hash(params) == hash(PhysicalParams())
    assert params.rest_energy == 1.0
    assert PhysicalParams(mass=2.0, c=3.0).rest_momentum == 6.0


@settings(max_examples=50, deadline=None)
@given(mass=positive, omega=positive, hbar=positive, scale=positive)
def test_alpha_homogeneity(mass, omega, hbar, scale):
    base = alpha(PhysicalParams(mass=mass, omega=omega, hbar=hbar))
    assert alpha(PhysicalParams(mass=scale * mass, omega=omega, hbar=hbar)) == pytest.approx(
        scale * base, rel=1e-12
    )
    assert alpha(PhysicalParams(mass=mass, omega=scale * omega, hbar=hbar)) == pytest.approx(
        scale * base, rel=1e-12
    )
    assert alpha(PhysicalParams(mass=mass, omega=omega, hbar=scale * hbar)) == pytest.approx(
        base / scale, rel=1e-12
    )


@pytest.mark.parametrize(
    "system, minimum",
    [
        (SystemKind.KG_OSCILLATOR, 0),
        (SystemKind.DIRAC_OSCILLATOR, 0),
        (SystemKind.KG_BOX, 1),
        (SystemKind.DIRAC_BOX, 1),
    ],
)
def test_state_minimum_n(system, minimum):
    assert system.minimum_n == minimum
    StateSpec(system=system, n=minimum)
    with pytest.raises(ValidationError):
        StateSpec(system=system, n=minimum - 1)


def test_state_defaults_and_with_n():
    state = StateSpec(system=SystemKind.KG_BOX, n=3)
    assert state.branch is Branch.PARTICLE
    moved = state.with_n(7)
    assert (moved.system, moved.n, moved.branch) == (SystemKind.KG_BOX, 7, Branch.PARTICLE)
    assert Branch.PARTICLE.sign == 1 and Branch.ANTIPARTICLE.sign == -1
    assert Branch.PARTICLE.opposite is Branch.ANTIPARTICLE


def test_system_kind_classification():
    assert SystemKind.KG_OSCILLATOR.is_oscillator and SystemKind.KG_OSCILLATOR.is_klein_gordon
    assert SystemKind.DIRAC_BOX.is_box and SystemKind.DIRAC_BOX.is_dirac
    assert str(SystemKind.DIRAC_OSCILLATOR) == "dirac-oscillator"


def test_natural_units_reject_overrides():
    units = UnitSystem()
    assert units.resolve() == natural_params()
    assert units.resolve(mass=None) == natural_params()
    with pytest.raises(ConfigurationError):
        units.resolve(mass=2.0)


def test_custom_units():
    units = UnitSystem(mode=UnitMode.CUSTOM)
    params = units.resolve(mass=2.0, c=10.0, omega=None)
    assert params.mass == 2.0 and params.c == 10.0 and params.omega == 1.0
    with pytest.raises(ConfigurationError):
        units.resolve(charge=1.0)
    with pytest.raises(ConfigurationError):
        units.resolve(hbar=-1.0)


def test_error_codes_and_payload():
    error = DomainError("outside", data={"x": 1.0})
    assert isinstance(error, NumericalError)
    assert error.code == ErrorCode.NUMERICAL_FAILURE == 1
    payload = error.to_payload()
    assert payload.error == "DomainError"
    assert payload.data == {"x": 1.0}
    assert ConfigurationError().code == ErrorCode.CONFIGURATION_ERROR == 2
    assert RootFindingError().message == "Root finding did not converge"
