import math

import numpy as np
import pytest

from RQMC.core.Errors import ConfigurationError, QuadratureError
from RQMC.quadrature import adaptive_simpson, integrate_segments, integrate_unbounded, Support


def test_simpson_smooth_integrands():
    assert adaptive_simpson(np.sin, 0.0, math.pi) == pytest.approx(2.0, rel=1e-10)
    assert adaptive_simpson(lambda x: x**3 - x, -1.0, 2.0) == pytest.approx(2.25, rel=1e-12)
    assert adaptive_simpson(np.exp, 0.0, 1.0) == pytest.approx(math.e - 1.0, rel=1e-10)


def test_simpson_orientation_and_empty_interval():
    forward = adaptive_simpson(np.cos, 0.0, 1.0)
    assert adaptive_simpson(np.cos, 1.0, 0.0) == pytest.approx(-forward, rel=1e-14)
    assert adaptive_simpson(np.cos, 0.3, 0.3) == 0.0


def test_simpson_complex_integrand():
    value = adaptive_simpson(lambda x: np.exp(1j * x), 0.0, math.pi)
    assert isinstance(value, complex)
    assert value == pytest.approx(2j, abs=1e-12)


def test_simpson_reports_non_convergence():
    rng = np.random.default_rng(7)
    with pytest.raises(QuadratureError):
        adaptive_simpson(lambda x: rng.standard_normal(x.shape), 0.0, 1.0)


def test_segments():
    edges = np.linspace(0.0, 1.0, 11)
    value = integrate_segments(lambda x: np.sin(10 * math.pi * x) ** 2, edges)
    assert value == pytest.approx(0.5, rel=1e-10)
    with pytest.raises(ConfigurationError):
        integrate_segments(np.sin, [0.0, 1.0, 0.5])
    with pytest.raises(ConfigurationError):
        integrate_segments(np.sin, [0.0])


def test_unbounded_gaussian():
    value = integrate_unbounded(lambda x: np.exp(-(x**2)), scale=1.0)
    assert value == pytest.approx(math.sqrt(math.pi), rel=1e-10)
    shifted = integrate_unbounded(lambda x: np.exp(-((x / 5.0) ** 2)), scale=5.0)
    assert shifted == pytest.approx(5.0 * math.sqrt(math.pi), rel=1e-10)


def test_unbounded_rejects_slow_tails_and_bad_scale():
    with pytest.raises(QuadratureError):
        integrate_unbounded(lambda x: 1.0 / (1.0 + x**2), scale=1.0)
    with pytest.raises(ConfigurationError):
        integrate_unbounded(np.exp, scale=0.0)


def test_support():
    line = Support(scale=2.0)
    assert not line.is_finite and line.length is None
    assert np.all(line.contains(np.array([-1e9, 0.0, 1e9])))

    box = Support(lower=0.0, upper=2.0, scale=2.0, breakpoints=(0.5, 1.0, 5.0))
    assert box.is_finite and box.length == 2.0
    assert box.contains(np.array([-0.1, 0.0, 2.0, 2.1])).tolist() == [False, True, True, False]
    assert box.integrate(lambda x: x) == pytest.approx(2.0, rel=1e-12)
    assert line.integrate(lambda x: np.exp(-(x**2) / 8.0)) == pytest.approx(
        math.sqrt(8.0 * math.pi), rel=1e-10
    )
