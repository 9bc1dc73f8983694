"""Numerical laboratory for big Hankel operators on the torus.

Builds Hankel matrices from trigonometric symbols, computes their norms,
singular and sigma numbers, estimates restricted-BMO norms by minimax
approximation, solves and certifies coordinate-wise Pick interpolation,
and evaluates model-space projections and Carleson embedding constants.
"""

__version__ = "0.1.0"

from .fourier import (  # noqa: F401
    FreqBox,
    Grid,
    Sector,
    TrigPoly1,
    TrigPoly2,
    default_grid,
    hilbert,
    inner,
    interpolate,
    multiply,
    norm1_grid,
    norm2,
    normInf_grid,
    project,
    sample,
)
