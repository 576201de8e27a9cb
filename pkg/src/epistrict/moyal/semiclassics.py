"""Semiclassical behaviour of the grid star product.

The scaled commutator (f * g - g * f) / (i hbar) converges to the
Poisson bracket {f, g} with an O(hbar^2) error for smooth observables
held fixed while hbar shrinks.  To keep the observables fixed the box
side L is pinned and the grid is refined as N = L^2 / (2 pi hbar), so
halving hbar should divide the error by about four.

Errors are measured on the central half of the grid: the torus
periodization makes the outer region meaningless for functions that are
only approximately periodic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .grid import PhaseGrid
from .quantize import moyal_star


@dataclass(frozen=True)
class GaussianObservable:
    """amplitude * (q/s)^{kq} (p/s)^{kp} exp(-((q-q0)^2+(p-p0)^2)/(2 s^2))."""
    q0: float
    p0: float
    s: float
    kq: int = 0
    kp: int = 0
    amplitude: float = 1.0

    def _envelope(self, Q, P):
        return self.amplitude * np.exp(
            -((Q - self.q0) ** 2 + (P - self.p0) ** 2) / (2 * self.s ** 2)
        )

    def _poly(self, Q, P):
        return (Q / self.s) ** self.kq * (P / self.s) ** self.kp

    def sample(self, Q, P):
        return self._poly(Q, P) * self._envelope(Q, P)

    def gradient(self, Q, P):
        """(df/dq, df/dp) in closed form."""
        env = self._envelope(Q, P)
        poly = self._poly(Q, P)
        dq = -(Q - self.q0) / self.s ** 2 * poly * env
        dp = -(P - self.p0) / self.s ** 2 * poly * env
        if self.kq:
            dq = dq + (self.kq / self.s) * (Q / self.s) ** (self.kq - 1) \
                * (P / self.s) ** self.kp * env
        if self.kp:
            dp = dp + (self.kp / self.s) * (Q / self.s) ** self.kq \
                * (P / self.s) ** (self.kp - 1) * env
        return dq, dp


def poisson_bracket(f_obs: GaussianObservable, g_obs: GaussianObservable,
                    Q: np.ndarray, P: np.ndarray) -> np.ndarray:
    fq, fp = f_obs.gradient(Q, P)
    gq, gp = g_obs.gradient(Q, P)
    return fq * gp - fp * gq


def grid_for(hbar: float, box_side: float) -> PhaseGrid:
    """Square grid with the given box side; N = L^2 / (2 pi hbar)."""
    n = int(round(box_side ** 2 / (2.0 * np.pi * hbar)))
    return PhaseGrid(n, hbar, box_side)


def default_observables(box_side: float):
    s = box_side / 10.0
    f = GaussianObservable(q0=0.08 * box_side, p0=0.0, s=s)
    g = GaussianObservable(q0=0.0, p0=0.06 * box_side, s=s, kq=1)
    return f, g


def commutator_bracket_error(hbar: float, box_side: float,
                             pair=None) -> float:
    """Max |(f*g - g*f)/(i hbar) - {f, g}| over the central half-grid."""
    grid = grid_for(hbar, box_side)
    f_obs, g_obs = pair if pair is not None else default_observables(box_side)
    Q, P = grid.meshgrid()
    f = f_obs.sample(Q, P).astype(complex)
    g = g_obs.sample(Q, P).astype(complex)
    comm = (moyal_star(grid, f, g) - moyal_star(grid, g, f)) / (1j * hbar)
    pb = poisson_bracket(f_obs, g_obs, Q, P)
    c = grid.n_points // 4
    return float(np.max(np.abs(comm - pb)[c:-c, c:-c]))


def semiclassical_commutator_check(hbars=(0.2, 0.1, 0.05),
                                   box_side: float = None,
                                   pair=None) -> dict:
    """Errors and successive error ratios across a decreasing hbar sweep.

    For an O(hbar^2) residual the ratios sit near 4 when each hbar is
    half the previous one.
    """
    hbars = tuple(hbars)
    if box_side is None:
        box_side = float(np.sqrt(2.0 * np.pi * hbars[0] * 128))
    errors = [commutator_bracket_error(h, box_side, pair) for h in hbars]
    ratios = [errors[i] / errors[i + 1] for i in range(len(errors) - 1)]
    return {"hbars": hbars, "errors": errors, "ratios": ratios,
            "box_side": box_side}
