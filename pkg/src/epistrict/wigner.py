"""Discrete Wigner representation for odd-prime qudits.

Phase-point operators

    A(m) = d^{-n} sum_a omega^{-<m, a>} W(a),    <m, a> = m^T J a,

form an orthogonal Hermitian basis: Tr A(m) = 1, Tr[A(m) A(m')] =
d^n delta_{m m'}, and they transform covariantly, W(b) A(m) W(b)^dag =
A(m + b).  The Wigner function of a density matrix is
W_rho(m) = d^{-n} Tr[rho A(m)]; it is computed here through the
characteristic function c(a) = Tr[rho W(a)] so the d^{2n} operator
products are shared across all phase points.
"""

from __future__ import annotations

import itertools

import numpy as np

from .weyl import QuditSystem


def phase_point_operator(system: QuditSystem, m) -> np.ndarray:
    d, n = system.d, system.n
    m = np.asarray(m, dtype=np.int64) % d
    A = np.zeros((system.dim, system.dim), dtype=complex)
    for a in system.labels():
        phase = system.omega ** (-system.symplectic_product(m, a) % d)
        A += phase * system.weyl(a)
    return A / float(d ** n)


def characteristic_function(system: QuditSystem, rho: np.ndarray) -> dict:
    """c(a) = Tr[rho W(a)] for every Weyl label a."""
    return {a: complex(np.trace(rho @ system.weyl(a))) for a in system.labels()}


def wigner_function(system: QuditSystem, rho: np.ndarray) -> "WignerTable":
    """W(m) = d^{-2n} sum_a omega^{<a, m>} c(a), real up to roundoff."""
    d, n = system.d, system.n
    c = characteristic_function(system, rho)
    values = {}
    for m in system.labels():
        total = 0.0 + 0.0j
        for a, ca in c.items():
            total += system.omega ** (system.symplectic_product(a, m)) * ca
        values[m] = total / float(d ** (2 * n))
    return WignerTable(system, values)


def inverse_wigner(system: QuditSystem, table: "WignerTable") -> np.ndarray:
    """rho = sum_m W(m) A(m); exact inverse of wigner_function."""
    rho = np.zeros((system.dim, system.dim), dtype=complex)
    for m, w in table.values.items():
        rho += w * phase_point_operator(system, m)
    return rho


class WignerTable:
    """Quasiprobability values on the discrete phase space Z_d^{2n}."""

    def __init__(self, system: QuditSystem, values: dict):
        self.system = system
        self.values = {tuple(int(x) for x in m): complex(v) for m, v in values.items()}

    def __getitem__(self, m):
        return self.values[tuple(int(x) % self.system.d for x in m)]

    def real_values(self, imag_tol: float = 1e-10) -> dict:
        bad = max(abs(v.imag) for v in self.values.values())
        if bad > imag_tol:
            raise ValueError(f"Wigner values not real within tolerance ({bad:.2e})")
        return {m: v.real for m, v in self.values.items()}

    def total(self) -> float:
        return float(sum(v.real for v in self.values.values()))

    def negativity(self) -> float:
        """sum of |negative mass|; zero exactly for stabilizer states."""
        return float(sum(max(0.0, -v.real) for v in self.values.values()))

    def support(self, tol: float = 1e-10) -> set:
        return {m for m, v in self.values.items() if abs(v) > tol}

    def as_array(self) -> np.ndarray:
        d, n = self.system.d, self.system.n
        arr = np.zeros((d,) * (2 * n))
        for m, v in self.values.items():
            arr[m] = v.real
        return arr


def wigner_overlap(t1: WignerTable, t2: WignerTable) -> float:
    """d^n sum_m W1(m) W2(m) = Tr[rho1 rho2]."""
    sys_ = t1.system
    total = sum(
        (t1.values[m] * np.conj(t2.values[m])).real for m in t1.values
    )
    return float(d_pow := (sys_.d ** sys_.n)) * total


def uniform_support_table(system: QuditSystem, points) -> WignerTable:
    """Uniform quasiprobability on a finite set of phase points."""
    pts = [tuple(int(x) % system.d for x in p) for p in points]
    w = 1.0 / len(pts)
    values = {m: 0.0 for m in system.labels()}
    for p in pts:
        values[p] = w
    return WignerTable(system, values)
