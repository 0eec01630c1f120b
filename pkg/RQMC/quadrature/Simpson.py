"""
Composite Simpson quadrature with panel doubling.

Integrands are vectorized callables f(x: ndarray) -> ndarray (real or complex).
Every doubling reuses the previous nodes: the old interior nodes all become even nodes
and only the new midpoints are evaluated.
"""

from typing import Callable, Optional, Sequence
import numpy as np
from pydantic import BaseModel, ConfigDict, Field
from RQMC.core.Errors import QuadratureError, ConfigurationError
from RQMC.logs.logging_config import get_logger

logger = get_logger(__name__)

Integrand = Callable[[np.ndarray], np.ndarray]

RTOL = 1e-10
ATOL = 1e-14
MIN_PANELS = 16
MAX_PANELS = 2**20
TAIL_TOL = 1e-12
START_WIDTH = 3.0
MAX_WIDTH = 96.0


def _scalar(value) -> float | complex:
    return complex(value) if np.iscomplexobj(value) else float(value)


def adaptive_simpson(
    f: Integrand,
    a: float,
    b: float,
    rtol: float = RTOL,
    atol: float = ATOL,
) -> float | complex:
    """
    Integrate f over [a, b].

    Panels double from 16 until two successive doublings both change the estimate by
    at most max(rtol*|I|, atol).

    Raises:
        QuadratureError: after 2^20 panels without convergence
    """
    if a == b:
        return 0.0
    if b < a:
        return -adaptive_simpson(f, b, a, rtol, atol)

    panels = MIN_PANELS
    x = np.linspace(a, b, panels + 1)
    fx = f(x)
    ends = fx[0] + fx[-1]
    odd = np.sum(fx[1:-1:2])
    even = np.sum(fx[2:-1:2])
    h = (b - a) / panels
    estimate = h / 3.0 * (ends + 4.0 * odd + 2.0 * even)
    agreed = 0

    while panels < MAX_PANELS:
        panels *= 2
        h = (b - a) / panels
        midpoints = a + h * (2 * np.arange(panels // 2) + 1)
        even = even + odd
        odd = np.sum(f(midpoints))
        refined = h / 3.0 * (ends + 4.0 * odd + 2.0 * even)
        if abs(refined - estimate) <= max(rtol * abs(refined), atol):
            agreed += 1
            if agreed == 2:
                return _scalar(refined)
        else:
            agreed = 0
        estimate = refined

    raise QuadratureError(
        "Simpson quadrature did not converge",
        data={"a": a, "b": b, "panels": panels, "estimate": str(estimate)},
    )


def integrate_segments(
    f: Integrand,
    edges: Sequence[float],
    rtol: float = RTOL,
    atol: float = ATOL,
) -> float | complex:
    """
    Sum of adaptive_simpson over consecutive edges, e.g. between the nodes of a density.
    """
    edges = np.asarray(edges, dtype=float)
    if edges.size < 2 or np.any(np.diff(edges) <= 0):
        raise ConfigurationError("Segment edges must be strictly increasing", data=list(edges))
    total = 0.0
    for lower, upper in zip(edges[:-1], edges[1:]):
        total = total + adaptive_simpson(f, lower, upper, rtol, atol)
    return _scalar(total)


def integrate_unbounded(
    f: Integrand,
    scale: float,
    rtol: float = RTOL,
    atol: float = ATOL,
    tail_tol: float = TAIL_TOL,
) -> float | complex:
    """
    Integrate an exponentially localized f over the real line.

    The window [-w*scale, w*scale] starts at w = 3 and doubles until the change is
    below tail_tol * max(1, |I|).

    Raises:
        QuadratureError: if w exceeds 96
    """
    if not scale > 0:
        raise ConfigurationError("Integration scale must be positive", data=scale)
    width = START_WIDTH
    previous = adaptive_simpson(f, -width * scale, width * scale, rtol, atol)
    while width < MAX_WIDTH:
        width *= 2
        current = adaptive_simpson(f, -width * scale, width * scale, rtol, atol)
        if abs(current - previous) < tail_tol * max(1.0, abs(current)):
            logger.debug(f"Unbounded integral converged at w = {width}")
            return current
        previous = current
    raise QuadratureError(
        "Integration window did not converge", data={"scale": scale, "width": width}
    )


class Support(BaseModel):
    """
    Where a density lives. Finite supports carry breakpoints between which the
    integrand has no zero; unbounded supports carry the length scale of the tails.
    """

    model_config = ConfigDict(frozen=True)

    lower: Optional[float] = Field(None, description="Left wall, None for the real line")
    upper: Optional[float] = Field(None, description="Right wall, None for the real line")
    scale: float = Field(1.0, gt=0, description="Length scale used for unbounded windows")
    breakpoints: tuple[float, ...] = Field(
        (), description="Interior split points for finite supports"
    )

    @property
    def is_finite(self) -> bool:
        return self.lower is not None and self.upper is not None

    @property
    def length(self) -> Optional[float]:
        return self.upper - self.lower if self.is_finite else None

    def contains(self, x: np.ndarray) -> np.ndarray:
        """Closed-interval membership; always true for the real line."""
        x = np.asarray(x, dtype=float)
        if not self.is_finite:
            return np.ones_like(x, dtype=bool)
        return (x >= self.lower) & (x <= self.upper)

    def integrate(
        self, f: Integrand, rtol: float = RTOL, atol: float = ATOL
    ) -> float | complex:
        if self.is_finite:
            inner = [b for b in self.breakpoints if self.lower < b < self.upper]
            return integrate_segments(f, [self.lower, *inner, self.upper], rtol, atol)
        return integrate_unbounded(f, self.scale, rtol, atol)
