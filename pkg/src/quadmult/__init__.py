"""Exact multiplier spectra of quadratic rational maps over imaginary
quadratic integer rings."""

from .quadfield import (
    Discriminant,
    QuadInt,
    QuadRat,
    enum_norm_divides,
    enum_norm_le,
    inverse_halfplane_points,
    norm,
    sqrt_in_RD,
)

__all__ = [
    "Discriminant",
    "QuadInt",
    "QuadRat",
    "norm",
    "enum_norm_le",
    "enum_norm_divides",
    "sqrt_in_RD",
    "inverse_halfplane_points",
]

__version__ = "0.1.0"
