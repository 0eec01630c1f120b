"""
Boxcar coarse-graining and the L1 distance between normalized curves.

The boxcar average at x is (G(x + w/2) - G(x - w/2)) / w with G the cumulative integral,
so the window width is exact in x whatever the grid. Curves with a finite support are
reflected at the walls; curves on the real line are zero-padded.
"""

import numpy as np
from scipy.integrate import cumulative_trapezoid, trapezoid

from RQMC.core.Errors import ConfigurationError, DomainError
from RQMC.densities.DensityCurve import DensityCurve, CurveKind
from RQMC.logs.logging_config import get_logger

logger = get_logger(__name__)


def _wall_value(xs: np.ndarray, vs: np.ndarray, wall: float) -> float:
    """Linear extrapolation of the first two samples to the wall."""
    slope = (vs[1] - vs[0]) / (xs[1] - xs[0])
    return max(0.0, vs[0] + slope * (wall - xs[0]))


def _reflected_cdf(curve: DensityCurve, lower: float, upper: float):
    inside = (curve.grid >= lower) & (curve.grid <= upper)
    xs = curve.grid[inside]
    vs = curve.values[inside]
    if xs.size < 2:
        raise ConfigurationError("Too few samples inside the support", data=int(xs.size))
    if xs[0] > lower:
        head = _wall_value(xs, vs, lower)
        xs = np.concatenate(([lower], xs))
        vs = np.concatenate(([head], vs))
    if xs[-1] < upper:
        tail = _wall_value(xs[::-1], vs[::-1], upper)
        xs = np.concatenate((xs, [upper]))
        vs = np.concatenate((vs, [tail]))
    cumulative = cumulative_trapezoid(vs, xs, initial=0.0)
    total = cumulative[-1]

    def cdf(y: np.ndarray) -> np.ndarray:
        below = y < lower
        above = y > upper
        mirrored = np.where(below, 2 * lower - y, np.where(above, 2 * upper - y, y))
        base = np.interp(np.clip(mirrored, lower, upper), xs, cumulative)
        return np.where(below, -base, np.where(above, 2 * total - base, base))

    return cdf


def coarse_grain(curve: DensityCurve, window: float) -> DensityCurve:
    """
    Boxcar average of width `window`, rescaled so the trapezoid integral is unchanged.

    Raises:
        ConfigurationError: window narrower than two grid spacings, or wider than a
            finite support
    """
    if not window >= 2.0 * curve.spacing:
        raise ConfigurationError(
            "Window must span at least two grid spacings",
            data={"window": window, "spacing": curve.spacing},
        )
    half = 0.5 * window
    grid = curve.grid
    if curve.support is not None:
        lower, upper = curve.support
        if window > upper - lower:
            raise ConfigurationError("Window wider than the support", data=window)
        cdf = _reflected_cdf(curve, lower, upper)
        values = (cdf(grid + half) - cdf(grid - half)) / window
        values = np.where((grid >= lower) & (grid <= upper), values, 0.0)
    else:
        cumulative = cumulative_trapezoid(curve.values, grid, initial=0.0)
        upper_cdf = np.interp(grid + half, grid, cumulative)
        lower_cdf = np.interp(grid - half, grid, cumulative)
        values = (upper_cdf - lower_cdf) / window
    values = np.clip(values, 0.0, None)

    original = curve.integral()
    smoothed = trapezoid(values, grid)
    if smoothed > 0:
        values = values * (original / smoothed)
    return curve.with_values(values, kind=CurveKind.COARSE, window=window)


def total_variation(curve: DensityCurve) -> float:
    """Sum of absolute differences between adjacent samples."""
    return float(np.sum(np.abs(np.diff(curve.values))))


def _unit_integral(grid: np.ndarray, values: np.ndarray) -> np.ndarray:
    total = trapezoid(values, grid)
    if not total > 0:
        raise DomainError("Cannot compare a curve with zero integral")
    return values / total


def l1_distance(curve_a: DensityCurve, curve_b: DensityCurve) -> float:
    """
    int |rho_a - rho_b| dx after normalizing both curves to unit integral.

    Curves on different grids are compared on the union of both grids, each
    interpolated linearly and taken as zero beyond its own grid.

    Raises:
        ConfigurationError: the two grids do not overlap
        DomainError: either curve has zero integral
    """
    same_grid = curve_a.grid.shape == curve_b.grid.shape and np.array_equal(
        curve_a.grid, curve_b.grid
    )
    if same_grid:
        grid = curve_a.grid
        values_a = _unit_integral(grid, curve_a.values)
        values_b = _unit_integral(grid, curve_b.values)
    else:
        if curve_a.grid[-1] <= curve_b.grid[0] or curve_b.grid[-1] <= curve_a.grid[0]:
            raise ConfigurationError("Curves share no part of their grids")
        grid = np.union1d(curve_a.grid, curve_b.grid)
        values_a = _unit_integral(
            grid, np.interp(grid, curve_a.grid, curve_a.values, left=0.0, right=0.0)
        )
        values_b = _unit_integral(
            grid, np.interp(grid, curve_b.grid, curve_b.values, left=0.0, right=0.0)
        )
    return float(trapezoid(np.abs(values_a - values_b), grid))
