"""Twisted convolution of chord coefficients.

Composing displacement operators gives
D[v] D[w] = alpha^{v_b w_a - v_a w_b} D[v + w], so the chord coefficients
of a product of operators are the twisted convolution of the factors'
coefficients.  When v + w leaves the centered label range it is folded
back by +-N, picking up the aliasing signs (-1)^{b} per q-fold and
(-1)^{a} per p-fold.

This is an O(N^4) computation and the package's one hot kernel.  A
compiled extension is used when available; the pure-NumPy fallback
computes the identical sum (one vectorized pass per chord) and agrees to
machine precision.  The star product computed through this route must
match the operator-product route exactly up to roundoff, which is the
main internal consistency check of the discretization.
"""

from __future__ import annotations

import numpy as np

from .grid import PhaseGrid
from .quantize import chord_transform, inverse_chord_transform

try:
    from .. import _twistconv as _compiled
except ImportError:  # pragma: no cover - depends on build environment
    _compiled = None

HAVE_COMPILED_KERNEL = _compiled is not None


def available_backends():
    backends = ["numpy"]
    if HAVE_COMPILED_KERNEL:
        backends.insert(0, "compiled")
    return backends


def _fold_data(offsets: np.ndarray, v: int, n: int):
    """Fold counts k and folded values u for the sums v + offsets."""
    lo = offsets[0]
    raw = v + offsets
    k = np.zeros_like(raw)
    k[raw < lo] = 1
    k[raw > lo + n - 1] = -1
    return k, raw + k * n


def twisted_convolution_numpy(grid: PhaseGrid, cf: np.ndarray,
                              cg: np.ndarray) -> np.ndarray:
    n = grid.n_points
    r = grid.offsets
    alpha = np.exp(1j * np.pi / n)
    out = np.zeros((n, n), dtype=complex)
    cg = np.asarray(cg, dtype=complex)
    col_phase = {vb: alpha ** (vb * r) for vb in r}
    for ai, va in enumerate(r):
        ka, ua = _fold_data(r, va, n)
        row_phase = alpha ** (-va * r)          # alpha^{-v_a w_b} over w_b
        for bi, vb in enumerate(r):
            c = cf[ai, bi]
            if c == 0:
                continue
            kb, _ = _fold_data(r, vb, n)
            # sign exponent: k_a (v_b + w_b) + k_b u_a, mod 2
            sgn_exp = np.outer(ka, vb + r) + np.outer(ua, kb)
            factor = (col_phase[vb][:, None] * row_phase[None, :]
                      * np.where(sgn_exp % 2, -1.0, 1.0))
            out += np.roll(c * factor * cg, shift=(va, vb), axis=(0, 1))
    return out


def twisted_convolution_compiled(grid: PhaseGrid, cf: np.ndarray,
                                 cg: np.ndarray) -> np.ndarray:
    if _compiled is None:
        raise RuntimeError("compiled kernel not available")
    return _compiled.twisted_convolution(
        np.ascontiguousarray(cf, dtype=np.complex128),
        np.ascontiguousarray(cg, dtype=np.complex128),
    )


def twisted_convolution(grid: PhaseGrid, cf: np.ndarray, cg: np.ndarray,
                        backend: str = "auto") -> np.ndarray:
    """Chord coefficients of Op(f) Op(g) from those of f and g."""
    cf = np.asarray(cf, dtype=complex)
    cg = np.asarray(cg, dtype=complex)
    if cf.shape != (grid.n_points,) * 2 or cg.shape != cf.shape:
        raise ValueError("coefficient arrays must be N x N for this grid")
    if backend == "auto":
        backend = "compiled" if HAVE_COMPILED_KERNEL else "numpy"
    if backend == "compiled":
        return twisted_convolution_compiled(grid, cf, cg)
    if backend == "numpy":
        return twisted_convolution_numpy(grid, cf, cg)
    raise ValueError(f"unknown backend {backend!r}")


def moyal_star_via_chords(grid: PhaseGrid, f: np.ndarray, g: np.ndarray,
                          backend: str = "auto") -> np.ndarray:
    """Star product evaluated entirely on chord space.

    Independent of the operator-product route in quantize.moyal_star:
    no operator is ever materialized.
    """
    cf = chord_transform(grid, f)
    cg = chord_transform(grid, g)
    return inverse_chord_transform(grid, twisted_convolution(grid, cf, cg, backend))
