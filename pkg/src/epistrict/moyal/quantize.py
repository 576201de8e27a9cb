"""Exact Weyl quantization on a centered N x N phase grid.

Displacement (chord) operators

    D[a, b] = alpha^{a b} X^a Z^b,    alpha = exp(i pi / N),

with X the cyclic shift and Z the centered clock diag(exp(2 pi i r_j / N)),
satisfy D[v] D[w] = alpha^{v_b w_a - v_a w_b} D[v + w], D[v]^dag = D[-v]
and Tr[D[v]^dag D[w]] = N delta_{vw}, and alias as
D[a +- N, b] = (-1)^b D[a, b], D[a, b +- N] = (-1)^a D[a, b].

A grid function f is expanded in the plane waves that are the Weyl
symbols of D: symbol(D[a, b])(x, y) = exp(2 pi i (b r_x - a r_y) / N).
Quantization maps the expansion coefficients onto the chord basis, so
symbol(quantize(f)) == f to machine precision, quantize(1) = identity,
and real symbols give Hermitian operators.  The product of symbols
star(f, g) = symbol(quantize(f) @ quantize(g)) is therefore associative
by construction.
"""

from __future__ import annotations

import numpy as np

from .grid import PhaseGrid


def _plane_wave_matrix(grid: PhaseGrid) -> np.ndarray:
    """E[j, k] = exp(-2 pi i r_j r_k / N); symmetric, E E^dag = N I."""
    r = grid.offsets
    return np.exp(-2j * np.pi * np.outer(r, r) / grid.n_points)


def _alpha_powers(grid: PhaseGrid) -> np.ndarray:
    """alpha^{r_a r_b} for all centered chord labels."""
    r = grid.offsets
    return np.exp(1j * np.pi * np.outer(r, r) / grid.n_points)


def chord_transform(grid: PhaseGrid, f: np.ndarray) -> np.ndarray:
    """Expansion coefficients C[a, b] of f in the chord plane waves.

    C[a, b] = N^{-2} sum_{x,y} f[x, y] exp(-2 pi i (b r_x - a r_y) / N).
    """
    f = np.asarray(f, dtype=complex)
    E = _plane_wave_matrix(grid)
    # sum over y with e^{+2 pi i a r_y / N} = conj(E), then over x with E
    return (E.conj() @ f.T @ E) / grid.n_points ** 2


def inverse_chord_transform(grid: PhaseGrid, C: np.ndarray) -> np.ndarray:
    """f[x, y] = sum_{a,b} C[a, b] exp(2 pi i (b r_x - a r_y) / N)."""
    E = _plane_wave_matrix(grid)
    M = np.asarray(C, dtype=complex).T @ E  # M[b, y] = sum_a C[a,b] e^{-2pi i r_a r_y/N}
    return E.conj() @ M                     # f[x, y] = sum_b e^{+2pi i r_b r_x/N} M[b, y]


def weyl_quantize(grid: PhaseGrid, f: np.ndarray) -> np.ndarray:
    """The N x N operator with Weyl symbol f."""
    N = grid.n_points
    C = chord_transform(grid, f)
    V = (C * _alpha_powers(grid)) @ _plane_wave_matrix(grid).conj()
    # V[a, x'] = sum_b C[a, b] alpha^{a b} e^{2 pi i r_{x'} r_b / N}
    op = np.zeros((N, N), dtype=complex)
    cols = np.arange(N)
    for ai, a in enumerate(grid.offsets):
        op[(cols + a) % N, cols] += V[ai]
    return op


def weyl_symbol(grid: PhaseGrid, op: np.ndarray) -> np.ndarray:
    """Exact inverse of weyl_quantize."""
    N = grid.n_points
    op = np.asarray(op, dtype=complex)
    V = np.empty((N, N), dtype=complex)
    cols = np.arange(N)
    for ai, a in enumerate(grid.offsets):
        V[ai] = op[(cols + a) % N, cols]
    E = _plane_wave_matrix(grid)
    # C[a, b] alpha^{a b} = N^{-1} sum_{x'} V[a, x'] e^{-2 pi i r_{x'} r_b / N}
    C = (V @ E) / N / _alpha_powers(grid)
    return inverse_chord_transform(grid, C)


def displacement_operator(grid: PhaseGrid, a: int, b: int) -> np.ndarray:
    """D[a, b] for integer chord labels (not reduced to the centered range)."""
    N = grid.n_points
    alpha = np.exp(1j * np.pi / N)
    shift = np.roll(np.eye(N, dtype=complex), a % N, axis=0)
    clock = np.diag(np.exp(2j * np.pi * grid.offsets * b / N))
    return alpha ** (a * b) * shift @ clock


def moyal_star(grid: PhaseGrid, f: np.ndarray, g: np.ndarray) -> np.ndarray:
    """Star product through the operator algebra: symbol(Op(f) Op(g))."""
    return weyl_symbol(grid, weyl_quantize(grid, f) @ weyl_quantize(grid, g))


def quantize_q(grid: PhaseGrid) -> np.ndarray:
    """Operator of the coordinate symbol q (multiplication by q)."""
    Q, _ = grid.meshgrid()
    return weyl_quantize(grid, Q.astype(complex))


def quantize_p(grid: PhaseGrid) -> np.ndarray:
    """Operator of the coordinate symbol p."""
    _, P = grid.meshgrid()
    return weyl_quantize(grid, P.astype(complex))
