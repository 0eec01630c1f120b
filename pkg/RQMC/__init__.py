"""
Relativistic quantum densities, spectra and Fourier transforms, and their classical limit.
"""

__version__ = "0.1.0"

__all__ = ["__version__"]
