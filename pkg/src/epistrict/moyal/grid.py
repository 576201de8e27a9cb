"""Centered phase-space grid for the discretized Moyal machinery.

The q and p axes each carry N points centered on the origin
(index j maps to r_j = j - N//2), with grid steps tied together by
dq * dp = 2 pi hbar / N.  That relation makes the discrete translation
and modulation operators close under the exact Heisenberg commutation
Z X = exp(2 pi i / N) X Z, so Weyl quantization on the grid is an exact
linear isomorphism rather than an approximation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class PhaseGrid:
    n_points: int
    hbar: float
    length_q: float

    def __post_init__(self):
        if self.n_points < 2:
            raise ValueError("need at least two grid points")
        if self.hbar <= 0 or self.length_q <= 0:
            raise ValueError("hbar and length_q must be positive")

    @property
    def length_p(self) -> float:
        return 2.0 * np.pi * self.hbar * self.n_points / self.length_q

    @property
    def dq(self) -> float:
        return self.length_q / self.n_points

    @property
    def dp(self) -> float:
        return self.length_p / self.n_points

    @property
    def center(self) -> int:
        return self.n_points // 2

    @property
    def offsets(self) -> np.ndarray:
        """Centered integer coordinates r_j = j - N//2."""
        return np.arange(self.n_points) - self.center

    @property
    def q(self) -> np.ndarray:
        return self.offsets * self.dq

    @property
    def p(self) -> np.ndarray:
        return self.offsets * self.dp

    def meshgrid(self):
        """(Q, P) arrays indexed [q-index, p-index]."""
        return np.meshgrid(self.q, self.p, indexing="ij")

    def sample(self, func) -> np.ndarray:
        Q, P = self.meshgrid()
        return np.asarray(func(Q, P), dtype=complex)


def square_grid(n_points: int, hbar: float) -> PhaseGrid:
    """Grid with equal q and p extents: L = sqrt(2 pi hbar N)."""
    return PhaseGrid(n_points, hbar, float(np.sqrt(2.0 * np.pi * hbar * n_points)))
