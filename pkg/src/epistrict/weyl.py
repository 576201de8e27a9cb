"""Weyl-Heisenberg operators, metaplectic unitaries and quadrature PVMs
for n qudits of odd prime dimension d.

Labels are vectors in Z_d^{2n} in the (q1, p1, ..., qn, pn) ordering used
throughout the package.  The single-mode displacement is

    W(q, p) = tau^{q p} X^q Z^p,    tau = omega^{(d+1)/2},

which obeys W(a) W(b) = tau^{<b,a>} W(a + b), W(a)^dag = W(-a) and the
group commutator phase omega^{<a,b>} (commutator taken as
W(b)W(a)W(b)^dag W(a)^dag).  Metaplectic unitaries are products of
symplectic-transvection unitaries and intertwine exactly:
V(S) W(a) V(S)^dag = W(S a) with no residual phase.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field

import numpy as np

from .fields import PrimeField

ATOL = 1e-10


class QuditSystem:
    """Dimension-d^n Hilbert space with cached Weyl machinery."""

    def __init__(self, d: int, n: int = 1):
        self.field = PrimeField(d)  # rejects even/composite d
        self.d = d
        self.n = n
        self.dim = d ** n
        self.omega = np.exp(2j * np.pi / d)
        self.tau = self.omega ** ((d + 1) // 2)
        self._X = np.roll(np.eye(d, dtype=complex), 1, axis=0)  # |x> -> |x+1>
        self._Z = np.diag(self.omega ** np.arange(d))
        self._weyl_cache = {}

    # -- labels ----------------------------------------------------------

    def labels(self):
        return itertools.product(range(self.d), repeat=2 * self.n)

    def J(self) -> np.ndarray:
        J = np.zeros((2 * self.n, 2 * self.n), dtype=np.int64)
        for i in range(self.n):
            J[2 * i, 2 * i + 1] = 1
            J[2 * i + 1, 2 * i] = -1
        return J

    def symplectic_product(self, a, b) -> int:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        return int(a @ self.J() @ b) % self.d

    # -- Weyl operators ---------------------------------------------------

    def weyl(self, label) -> np.ndarray:
        label = tuple(int(x) % self.d for x in label)
        if len(label) != 2 * self.n:
            raise ValueError("label must have length 2n")
        if label in self._weyl_cache:
            return self._weyl_cache[label]
        op = np.ones((1, 1), dtype=complex)
        for i in range(self.n):
            q, p = label[2 * i], label[2 * i + 1]
            single = (
                self.tau ** ((q * p) % self.d)
                * np.linalg.matrix_power(self._X, q)
                @ np.linalg.matrix_power(self._Z, p)
            )
            op = np.kron(op, single)
        self._weyl_cache[label] = op
        return op

    def weyl_composition_phase(self, a, b) -> complex:
        """Phase c with W(a) W(b) = c W(a+b): tau^{<b,a>}."""
        return self.tau ** self.symplectic_product(b, a)

    # -- symplectic transvections ----------------------------------------

    def transvection_matrix(self, v, c) -> np.ndarray:
        """T(x) = x + c <x,v> v over Z_d."""
        v = np.asarray(v, dtype=np.int64) % self.d
        T = np.eye(2 * self.n, dtype=np.int64) + c * np.outer(v, self.J() @ v)
        return T % self.d

    def transvection_unitary(self, v, c) -> np.ndarray:
        """d^{-1/2} sum_k tau^{-k^2/c} W(k v); intertwines exactly."""
        c = int(c) % self.d
        if c == 0:
            return np.eye(self.dim, dtype=complex)
        c_inv = pow(c, self.d - 2, self.d)
        v = np.asarray(v, dtype=np.int64) % self.d
        M = np.zeros((self.dim, self.dim), dtype=complex)
        for k in range(self.d):
            M += self.tau ** ((-c_inv * k * k) % self.d) * self.weyl(k * v)
        return M / np.sqrt(self.d)

    def _affine_solutions(self, constraints, rhs):
        """All z in Z_d^{2n} with constraint . z = rhs (row constraints)."""
        dim = 2 * self.n
        if not constraints:
            for z in itertools.product(range(self.d), repeat=dim):
                yield np.array(z, dtype=np.int64)
            return
        A = np.array(constraints, dtype=np.int64) % self.d
        for z in itertools.product(range(self.d), repeat=dim):
            z = np.array(z, dtype=np.int64)
            if np.all((A @ z - np.array(rhs)) % self.d == 0):
                yield z

    def _transvections_mapping(self, u, w, fixed):
        """One or two transvections sending u to w, fixing the given vectors."""
        d, J = self.d, self.J()
        u = np.asarray(u, dtype=np.int64) % d
        w = np.asarray(w, dtype=np.int64) % d
        if np.array_equal(u, w):
            return []
        eta = int(u @ J @ w) % d
        if eta != 0:
            return [((w - u) % d, pow(eta, d - 2, d))]
        # <u,w> = 0: route through z with <u,z> != 0 != <z,w>, keeping the
        # already-fixed basis vectors fixed (<t, z> = <t, u> for each t).
        constraints = [(np.asarray(t, dtype=np.int64) @ J) % d for t in fixed]
        rhs = [int(np.asarray(t, dtype=np.int64) @ J @ u) % d for t in fixed]
        for z in self._affine_solutions(constraints, rhs):
            e1 = int(u @ J @ z) % d
            e2 = int(z @ J @ w) % d
            if e1 and e2:
                return [
                    ((z - u) % d, pow(e1, d - 2, d)),
                    ((w - z) % d, pow(e2, d - 2, d)),
                ]
        raise RuntimeError("no intermediate vector found (should not happen, d>2)")

    def symplectic_transvections(self, S):
        """Write S as a left-to-right product of transvections (v, c)."""
        d = self.d
        dim = 2 * self.n
        S = np.asarray(S, dtype=np.int64) % d
        if not self.is_symplectic(S):
            raise ValueError("matrix is not symplectic over Z_d")
        A = S.copy()
        word = []  # transvections t with t_m ... t_1 S = I
        fixed = []
        for col in range(dim):
            target = np.zeros(dim, dtype=np.int64)
            target[col] = 1
            for v, c in self._transvections_mapping(A[:, col], target, fixed):
                A = (self.transvection_matrix(v, c) @ A) % d
                word.append((v, c))
            fixed.append(target)
        assert np.array_equal(A, np.eye(dim, dtype=np.int64) % d)
        # S = t_1^{-1} ... t_m^{-1}; inverse of (v, c) is (v, -c)
        return [(v, (-c) % d) for v, c in word]

    def is_symplectic(self, S) -> bool:
        S = np.asarray(S, dtype=np.int64) % self.d
        J = self.J()
        return np.all((S.T @ J @ S - J) % self.d == 0)

    def clifford_unitary(self, S) -> np.ndarray:
        """Metaplectic V(S) with V W(a) V^dag = W(S a) exactly."""
        U = np.eye(self.dim, dtype=complex)
        for v, c in self.symplectic_transvections(S):
            U = U @ self.transvection_unitary(v, c)
        return U

    def find_symplectic_sending(self, u, w) -> np.ndarray:
        """Some S in Sp(2n, Z_d) with S u = w (u, w nonzero)."""
        d = self.d
        S = np.eye(2 * self.n, dtype=np.int64)
        for v, c in self._transvections_mapping(u, w, fixed=[]):
            S = (self.transvection_matrix(v, c) @ S) % d
        return S

    # -- PVMs --------------------------------------------------------------

    def position_pvm(self, mode: int = 0) -> "QuadraturePVM":
        if not 0 <= mode < self.n:
            raise ValueError("mode out of range")
        projectors = {}
        for k in range(self.d):
            single = np.zeros((self.d, self.d), dtype=complex)
            single[k, k] = 1.0
            op = np.ones((1, 1), dtype=complex)
            for i in range(self.n):
                op = np.kron(op, single if i == mode else np.eye(self.d))
            projectors[k] = op
        label = [0] * (2 * self.n)
        label[2 * mode + 1] = 1
        return QuadraturePVM(
            coeffs=tuple(1 if i == 2 * mode else 0 for i in range(2 * self.n)),
            constant=0,
            projectors=projectors,
            weyl_label=tuple(label),
        )

    def quadrature_pvm(self, coeffs, constant=0) -> "QuadraturePVM":
        """PVM of the functional f = coeffs . m + constant.

        Built per the conjugation recipe: a symplectic taking the position
        label to u_f = -J f conjugates the mode-0 position PVM.  The result
        is the spectral family of W(u_f) and does not depend on the choice.
        """
        d = self.d
        coeffs = tuple(int(x) % d for x in coeffs)
        constant = int(constant) % d
        if all(x == 0 for x in coeffs):
            raise ValueError("zero functional has no quadrature PVM")
        f = np.array(coeffs, dtype=np.int64)
        u_f = (-(self.J() @ f)) % d
        u_q = np.zeros(2 * self.n, dtype=np.int64)
        u_q[1] = 1  # Weyl label of the mode-0 position PVM (the clock Z)
        base = self.position_pvm(0)
        if np.array_equal(u_f, u_q):
            V = np.eye(self.dim, dtype=complex)
        else:
            M = self.find_symplectic_sending(u_q, u_f)
            V = self.clifford_unitary(M)
        projectors = {
            (k + constant) % d: V @ P @ V.conj().T
            for k, P in base.projectors.items()
        }
        return QuadraturePVM(coeffs, constant, projectors, tuple(int(x) for x in u_f))

    def joint_pvm(self, basis_rows) -> dict:
        """Products of commuting quadrature projectors over a basis.

        basis_rows: iterable of coefficient vectors of Poisson-commuting
        functionals.  Returns {valuation tuple: projector}; for an empty
        basis the single outcome () gets the identity.
        """
        rows = [tuple(int(x) % self.d for x in r) for r in basis_rows]
        for i in range(len(rows)):
            for j in range(i + 1, len(rows)):
                a = np.array(rows[i]), np.array(rows[j])
                if self.symplectic_product(a[0], a[1]) != 0:
                    raise ValueError("basis functionals must Poisson-commute")
        pvms = [self.quadrature_pvm(r) for r in rows]
        out = {}
        for vals in itertools.product(range(self.d), repeat=len(rows)):
            P = np.eye(self.dim, dtype=complex)
            for pvm, v in zip(pvms, vals):
                P = P @ pvm.projectors[v]
            out[vals] = P
        return out


@dataclass
class QuadraturePVM:
    coeffs: tuple
    constant: int
    projectors: dict = dc_field(repr=False)
    weyl_label: tuple = ()

    @property
    def outcomes(self):
        return sorted(self.projectors)

    def completeness_defect(self) -> float:
        total = sum(self.projectors.values())
        return float(np.max(np.abs(total - np.eye(total.shape[0]))))


def is_unitary(U: np.ndarray, atol: float = ATOL) -> bool:
    return np.allclose(U @ U.conj().T, np.eye(U.shape[0]), atol=atol)


def is_projector(P: np.ndarray, atol: float = ATOL) -> bool:
    return np.allclose(P @ P, P, atol=atol) and np.allclose(P, P.conj().T, atol=atol)


def equal_up_to_phase(A: np.ndarray, B: np.ndarray, atol: float = ATOL) -> bool:
    k = np.argmax(np.abs(B))
    b = B.flat[k]
    if abs(b) < atol:
        return np.allclose(A, B, atol=atol)
    phase = A.flat[k] / b
    return abs(abs(phase) - 1.0) < 1e-6 and np.allclose(A, phase * B, atol=atol)


def pvms_commute(system: QuditSystem, coeff_list, atol: float = ATOL) -> bool:
    """Whether all projector pairs of the quadrature PVMs commute."""
    pvms = [system.quadrature_pvm(c) for c in coeff_list]
    for i in range(len(pvms)):
        for j in range(i + 1, len(pvms)):
            for P in pvms[i].projectors.values():
                for Q in pvms[j].projectors.values():
                    if not np.allclose(P @ Q, Q @ P, atol=atol):
                        return False
    return True
