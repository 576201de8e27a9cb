"""Discretized Moyal machinery: exact Weyl quantization on a centered
phase grid, the star product along two independent routes (operator
products and twisted convolution of chords), and semiclassical checks.
"""

from .grid import PhaseGrid, square_grid
from .quantize import (
    chord_transform,
    displacement_operator,
    inverse_chord_transform,
    moyal_star,
    quantize_p,
    quantize_q,
    weyl_quantize,
    weyl_symbol,
)
from .semiclassics import (
    GaussianObservable,
    commutator_bracket_error,
    default_observables,
    grid_for,
    poisson_bracket,
    semiclassical_commutator_check,
)
from .twisted import (
    HAVE_COMPILED_KERNEL,
    available_backends,
    moyal_star_via_chords,
    twisted_convolution,
    twisted_convolution_numpy,
)

__all__ = [
    "PhaseGrid",
    "square_grid",
    "chord_transform",
    "inverse_chord_transform",
    "displacement_operator",
    "weyl_quantize",
    "weyl_symbol",
    "moyal_star",
    "quantize_q",
    "quantize_p",
    "GaussianObservable",
    "poisson_bracket",
    "grid_for",
    "default_observables",
    "commutator_bracket_error",
    "semiclassical_commutator_check",
    "HAVE_COMPILED_KERNEL",
    "available_backends",
    "twisted_convolution",
    "twisted_convolution_numpy",
    "moyal_star_via_chords",
]
