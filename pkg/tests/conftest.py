import pytest

from RQMC.core.PhysicalParams import PhysicalParams, natural_params


@pytest.fixture
def natural() -> PhysicalParams:
    return natural_params()


@pytest.fixture
def slow_light() -> PhysicalParams:
    """Natural units with c = 1000: close to the non-relativistic limit."""
    return PhysicalParams(c=1e3)


@pytest.fixture
def heavy() -> PhysicalParams:
    """m = 1e4: hbar k / (mc) is small for the low box roots."""
    return PhysicalParams(mass=1e4)
