from RQMC.quadrature.Simpson import (
    adaptive_simpson,
    integrate_segments,
    integrate_unbounded,
    Support,
)

__all__ = ["adaptive_simpson", "integrate_segments", "integrate_unbounded", "Support"]
