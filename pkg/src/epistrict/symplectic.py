"""Symplectic linear algebra over Q, R and Z_d in the quadrature setting.

Phase-space points and functional coefficient vectors share the ordering
(q1, p1, ..., qn, pn), so a functional evaluates as coeffs . m + const
under the plain dot product.  The form J is block-diagonal with per-mode
blocks [[0, 1], [-1, 0]], fixing {q, p} = +1.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import linalg
from .fields import check_same_field


class DimensionMismatchError(ValueError):
    pass


def symplectic_form_matrix(field, n: int):
    """The 2n x 2n matrix J, block-diagonal per mode."""
    J = [[field.zero] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        J[2 * i][2 * i + 1] = field.one
        J[2 * i + 1][2 * i] = field.neg(field.one)
    return tuple(tuple(row) for row in J)


@dataclass(frozen=True)
class QuadratureFunctional:
    """f = sum_i a_i q_i + b_i p_i + c, stored as (coeffs, constant)."""

    field: object
    coeffs: tuple
    constant: object

    def __post_init__(self):
        if len(self.coeffs) % 2 != 0:
            raise DimensionMismatchError("coefficient vector must have even length")
        object.__setattr__(self, "coeffs", tuple(self.field.of(c) for c in self.coeffs))
        object.__setattr__(self, "constant", self.field.of(self.constant))

    @property
    def n(self) -> int:
        return len(self.coeffs) // 2

    def evaluate(self, point):
        if len(point) != len(self.coeffs):
            raise DimensionMismatchError("point/functional dimension mismatch")
        return self.field.add(linalg.dot(self.field, self.coeffs, point), self.constant)

    def is_zero(self) -> bool:
        return linalg.is_zero_vec(self.field, self.coeffs)


def functional(field, coeffs, constant=0) -> QuadratureFunctional:
    return QuadratureFunctional(field, tuple(coeffs), constant)


def q_functional(field, n: int, mode: int = 0) -> QuadratureFunctional:
    coeffs = [0] * (2 * n)
    coeffs[2 * mode] = 1
    return functional(field, coeffs)


def p_functional(field, n: int, mode: int = 0) -> QuadratureFunctional:
    coeffs = [0] * (2 * n)
    coeffs[2 * mode + 1] = 1
    return functional(field, coeffs)


def symplectic_product(f: QuadratureFunctional, g: QuadratureFunctional):
    """<f, g> = f^T J g; constants are ignored."""
    check_same_field(f.field, g.field)
    if len(f.coeffs) != len(g.coeffs):
        raise DimensionMismatchError("functionals live in different phase spaces")
    field = f.field
    s = field.zero
    for i in range(f.n):
        a_f, b_f = f.coeffs[2 * i], f.coeffs[2 * i + 1]
        a_g, b_g = g.coeffs[2 * i], g.coeffs[2 * i + 1]
        s = field.add(s, field.sub(field.mul(a_f, b_g), field.mul(a_g, b_f)))
    return s


def poisson_bracket_oracle(f: QuadratureFunctional, g: QuadratureFunctional):
    """[f, g]_PB from the partial derivatives of the linear forms.

    For linear functionals df/dq_i = a_i and df/dp_i = b_i, so
    [f, g] = sum_i (a^f_i b^g_i - a^g_i b^f_i), independent of the point.
    """
    check_same_field(f.field, g.field)
    if len(f.coeffs) != len(g.coeffs):
        raise DimensionMismatchError("functionals live in different phase spaces")
    field = f.field
    s = field.zero
    for i in range(f.n):
        df_dq, df_dp = f.coeffs[2 * i], f.coeffs[2 * i + 1]
        dg_dq, dg_dp = g.coeffs[2 * i], g.coeffs[2 * i + 1]
        s = field.add(s, field.sub(field.mul(df_dq, dg_dp), field.mul(dg_dq, df_dp)))
    return s


class Subspace:
    """A subspace of F^{2n}, held as a canonical RREF row basis."""

    def __init__(self, field, ambient_dim: int, rows=()):
        self.field = field
        self.ambient_dim = ambient_dim
        rows = [tuple(field.of(x) for x in r) for r in rows]
        for r in rows:
            if len(r) != ambient_dim:
                raise DimensionMismatchError("basis row has wrong length")
        reduced, _ = linalg.rref(field, rows)
        self.rows = tuple(r for r in reduced if not linalg.is_zero_vec(field, r))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def contains(self, v) -> bool:
        stacked = self.rows + (tuple(self.field.of(x) for x in v),)
        return linalg.rank(self.field, stacked) == self.dim

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other.rows)

    def add(self, other: "Subspace") -> "Subspace":
        check_same_field(self.field, other.field)
        return Subspace(self.field, self.ambient_dim, self.rows + other.rows)

    def intersect(self, other: "Subspace") -> "Subspace":
        constraints = linalg.kernel(self.field, self.rows) + linalg.kernel(
            other.field, other.rows
        )
        if not constraints:
            return Subspace(self.field, self.ambient_dim,
                            linalg.identity(self.field, self.ambient_dim))
        return Subspace(self.field, self.ambient_dim,
                        linalg.kernel(self.field, constraints))

    def vectors(self):
        """All vectors of the subspace (finite fields only)."""
        field = self.field
        points = [tuple(field.zero for _ in range(self.ambient_dim))]
        for row in self.rows:
            points = [
                linalg.vec_add(field, pt, linalg.vec_scale(field, field.of(c), row))
                for pt in points
                for c in field.elements()
            ]
        return points

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.field == other.field
            and self.ambient_dim == other.ambient_dim
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.field, self.ambient_dim, self.rows))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


def omega_complement(W: Subspace) -> Subspace:
    """W-perp under the symplectic form: {x : w^T J x = 0 for all w in W}."""
    field = W.field
    n = W.ambient_dim // 2
    J = symplectic_form_matrix(field, n)
    if not W.rows:
        return Subspace(field, W.ambient_dim, linalg.identity(field, W.ambient_dim))
    constraints = linalg.mat_mul(field, W.rows, J)
    return Subspace(field, W.ambient_dim, linalg.kernel(field, constraints))


def _pairwise_products_vanish(field, rows, n):
    for i in range(len(rows)):
        fi = QuadratureFunctional(field, rows[i], 0)
        for j in range(i + 1, len(rows)):
            fj = QuadratureFunctional(field, rows[j], 0)
            if not field.is_zero(symplectic_product(fi, fj)):
                return False
    return True


def is_isotropic(W: Subspace) -> bool:
    return _pairwise_products_vanish(W.field, W.rows, W.ambient_dim // 2)


def is_lagrangian(W: Subspace) -> bool:
    return is_isotropic(W) and W.dim == W.ambient_dim // 2


class AffineSymplecticMap:
    """m -> S m + a with S^T J S = J (exact, or within tol on floats)."""

    def __init__(self, field, S, a=None):
        self.field = field
        self.S = tuple(tuple(field.of(x) for x in row) for row in S)
        dim = len(self.S)
        if dim % 2 != 0 or any(len(row) != dim for row in self.S):
            raise DimensionMismatchError("S must be square of even dimension")
        if a is None:
            a = [field.zero] * dim
        self.a = tuple(field.of(x) for x in a)
        if len(self.a) != dim:
            raise DimensionMismatchError("displacement has wrong length")
        if not is_symplectic_matrix(field, self.S):
            raise ValueError("S does not preserve the symplectic form")

    @property
    def n(self) -> int:
        return len(self.S) // 2

    def apply(self, m):
        if len(m) != len(self.S):
            raise DimensionMismatchError("point has wrong dimension")
        return linalg.vec_add(self.field, linalg.mat_vec(self.field, self.S, m), self.a)

    def compose(self, first: "AffineSymplecticMap") -> "AffineSymplecticMap":
        """self after first: m -> S2 (S1 m + a1) + a2."""
        check_same_field(self.field, first.field)
        S = linalg.mat_mul(self.field, self.S, first.S)
        a = linalg.vec_add(
            self.field, linalg.mat_vec(self.field, self.S, first.a), self.a
        )
        return AffineSymplecticMap(self.field, S, a)

    def inverse(self) -> "AffineSymplecticMap":
        S_inv = linalg.inverse(self.field, self.S)
        a_inv = linalg.vec_neg(self.field, linalg.mat_vec(self.field, S_inv, self.a))
        return AffineSymplecticMap(self.field, S_inv, a_inv)

    def __repr__(self):
        return f"AffineSymplecticMap(n={self.n}, field={self.field})"


def is_symplectic_matrix(field, S) -> bool:
    n = len(S) // 2
    J = symplectic_form_matrix(field, n)
    St = linalg.transpose(S)
    lhs = linalg.mat_mul(field, linalg.mat_mul(field, St, J), S)
    return all(
        field.eq(x, y) for lr, jr in zip(lhs, J) for x, y in zip(lr, jr)
    )


def identity_map(field, n: int) -> AffineSymplecticMap:
    return AffineSymplecticMap(field, linalg.identity(field, 2 * n))


def apply_affine(T: AffineSymplecticMap, m):
    return T.apply(m)


# -- generators of the symplectic group, used for sampling and decomposition

def fourier_generator(field, n, mode):
    """Per-mode J block: q -> p, p -> -q on the chosen mode."""
    S = [list(r) for r in linalg.identity(field, 2 * n)]
    i = 2 * mode
    S[i][i] = field.zero
    S[i][i + 1] = field.neg(field.one)
    S[i + 1][i] = field.one
    S[i + 1][i + 1] = field.zero
    return tuple(tuple(r) for r in S)


def shear_generator(field, n, mode, c):
    """q -> q, p -> p + c q on the chosen mode."""
    S = [list(r) for r in linalg.identity(field, 2 * n)]
    S[2 * mode + 1][2 * mode] = field.of(c)
    return tuple(tuple(r) for r in S)


def scaling_generator(field, n, mode, c):
    """q -> c q, p -> c^{-1} p on the chosen mode; c invertible."""
    S = [list(r) for r in linalg.identity(field, 2 * n)]
    S[2 * mode][2 * mode] = field.of(c)
    S[2 * mode + 1][2 * mode + 1] = field.inv(field.of(c))
    return tuple(tuple(r) for r in S)


def sum_generator(field, n, src, dst, c=1):
    """q_dst += c q_src, p_src -= c p_dst (the symplectic controlled add)."""
    S = [list(r) for r in linalg.identity(field, 2 * n)]
    S[2 * dst][2 * src] = field.of(c)
    S[2 * src + 1][2 * dst + 1] = field.neg(field.of(c))
    return tuple(tuple(r) for r in S)


def swap_generator(field, n, i, j):
    S = [[field.zero] * (2 * n) for _ in range(2 * n)]
    perm = list(range(2 * n))
    perm[2 * i], perm[2 * j] = perm[2 * j], perm[2 * i]
    perm[2 * i + 1], perm[2 * j + 1] = perm[2 * j + 1], perm[2 * i + 1]
    for r, c in enumerate(perm):
        S[r][c] = field.one
    return tuple(tuple(r) for r in S)


def random_symplectic(n: int, field, seed: int, n_factors: int = 20,
                      with_displacement: bool = True) -> AffineSymplecticMap:
    """Seeded product of symplectic generators, plus a random displacement."""
    rng = random.Random(seed)
    S = linalg.identity(field, 2 * n)

    def nonzero():
        if field.char:
            return rng.randrange(1, field.char)
        return rng.choice([-2, -1, 1, 2, 3])

    for _ in range(n_factors):
        mode = rng.randrange(n)
        kind = rng.randrange(4 if n == 1 else 6)
        if kind == 0:
            g = fourier_generator(field, n, mode)
        elif kind == 1:
            g = shear_generator(field, n, mode, nonzero())
        elif kind == 2:
            g = scaling_generator(field, n, mode, nonzero())
        elif kind == 3:
            g = shear_generator(field, n, mode, nonzero())
        elif kind == 4:
            other = rng.choice([m for m in range(n) if m != mode])
            g = sum_generator(field, n, mode, other, nonzero())
        else:
            other = rng.choice([m for m in range(n) if m != mode])
            g = swap_generator(field, n, mode, other)
        S = linalg.mat_mul(field, g, S)

    if with_displacement:
        if field.char:
            a = [rng.randrange(field.char) for _ in range(2 * n)]
        else:
            a = [rng.randint(-3, 3) for _ in range(2 * n)]
    else:
        a = None
    return AffineSymplecticMap(field, S, a)


def enumerate_isotropic(n: int, d_field, target_dim: int):
    """All isotropic subspaces of Z_d^{2n} of the given dimension."""
    if d_field.char == 0:
        raise ValueError("enumeration requires a finite field")
    d = d_field.char
    if d ** (n * n) > 10 ** 6:
        raise ValueError("enumeration guard exceeded: d^(n^2) > 1e6")
    ambient = 2 * n
    current = {Subspace(d_field, ambient)}
    for _ in range(target_dim):
        extended = set()
        for W in current:
            comp = omega_complement(W)
            for v in comp.vectors():
                if linalg.is_zero_vec(d_field, v) or W.contains(v):
                    continue
                extended.add(Subspace(d_field, ambient, W.rows + (v,)))
        current = extended
    return sorted(current, key=lambda s: s.rows)


def enumerate_lagrangian(n: int, d_field):
    """All Lagrangian subspaces of Z_d^{2n}, canonically ordered."""
    return enumerate_isotropic(n, d_field, n)
