from RQMC.specfun.Hermite import hermite_scaled, hermite_scaled_pair
from RQMC.specfun.Laguerre import laguerre
from RQMC.specfun.Bessel import bessel_j0

__all__ = ["hermite_scaled", "hermite_scaled_pair", "laguerre", "bessel_j0"]
