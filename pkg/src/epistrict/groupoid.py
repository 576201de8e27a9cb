"""Linear model of the symplectic pair groupoid on phase space.

Arrows are pairs of phase-space points with composition by matching
middle points.  The double phase space carries the form blockdiag(J, -J);
the chart map Phi identifies it with the cotangent space of the base,
carrying the constant Darboux form.  All checks here are exact.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .fields import QQ
from .symplectic import Subspace, symplectic_form_matrix


class NotComposableError(ValueError):
    pass


@dataclass(frozen=True)
class PairGroupoidElement:
    """An arrow y -> x, stored as the pair (x, y)."""

    field: object
    x: tuple
    y: tuple

    def __post_init__(self):
        if len(self.x) != len(self.y):
            raise ValueError("endpoints live in different spaces")
        object.__setattr__(self, "x", tuple(self.field.of(v) for v in self.x))
        object.__setattr__(self, "y", tuple(self.field.of(v) for v in self.y))


def source(g: PairGroupoidElement):
    return g.y


def target(g: PairGroupoidElement):
    return g.x


def unit(field, point) -> PairGroupoidElement:
    return PairGroupoidElement(field, point, point)


def inverse(g: PairGroupoidElement) -> PairGroupoidElement:
    return PairGroupoidElement(g.field, g.y, g.x)


def is_composable(g: PairGroupoidElement, h: PairGroupoidElement) -> bool:
    return all(g.field.eq(a, b) for a, b in zip(g.y, h.x))


def compose(g: PairGroupoidElement, h: PairGroupoidElement) -> PairGroupoidElement:
    """(a, b) . (b, c) = (a, c); defined only on matching middle points."""
    if not is_composable(g, h):
        raise NotComposableError("arrows do not share a middle point")
    return PairGroupoidElement(g.field, g.x, h.y)


def double_form_matrix(field, n: int):
    """sigma on Omega (+) Omega-bar: blockdiag(J, -J) in (x, y) coordinates."""
    J = symplectic_form_matrix(field, n)
    dim = 2 * n
    M = [[field.zero] * (2 * dim) for _ in range(2 * dim)]
    for i in range(dim):
        for j in range(dim):
            M[i][j] = J[i][j]
            M[dim + i][dim + j] = field.neg(J[i][j])
    return tuple(tuple(r) for r in M)


def cotangent_form_matrix(field, n: int):
    """Constant Darboux form on the chart (u, xi): blocks [[0, I], [-I, 0]]."""
    dim = 2 * n
    M = [[field.zero] * (2 * dim) for _ in range(2 * dim)]
    for i in range(dim):
        M[i][dim + i] = field.one
        M[dim + i][i] = field.neg(field.one)
    return tuple(tuple(r) for r in M)


def form_value(field, form, v, w):
    return linalg.dot(field, v, linalg.mat_vec(field, form, w))


def is_lagrangian_for_form(field, rows, form) -> bool:
    reduced, _ = linalg.rref(field, rows)
    reduced = tuple(r for r in reduced if not linalg.is_zero_vec(field, r))
    ambient = len(form)
    if 2 * len(reduced) != ambient:
        return False
    for i in range(len(reduced)):
        for j in range(i, len(reduced)):
            if not field.is_zero(form_value(field, form, reduced[i], reduced[j])):
                return False
    return True


def multiplication_graph_rows(field, n: int, flip_sign_bug: bool = False):
    """Basis of {((a,c),(a,b),(b,c))} inside (Omega(+)Omega-bar)^3.

    flip_sign_bug embeds (b, c) as (2b, c), breaking isotropy; used as a
    negative control in tests.
    """
    dim = 2 * n
    rows = []
    for block, coord in [(0, "a"), (1, "b"), (2, "c")]:
        for k in range(dim):
            row = [field.zero] * (6 * dim)
            if coord == "a":
                row[k] = field.one              # x-slot of (a, c)
                row[2 * dim + k] = field.one    # x-slot of (a, b)
            elif coord == "b":
                row[3 * dim + k] = field.one    # y-slot of (a, b)
                row[4 * dim + k] = field.one    # x-slot of (b, c)
            else:
                row[dim + k] = field.one        # y-slot of (a, c)
                row[5 * dim + k] = field.one    # y-slot of (b, c)
            if flip_sign_bug and coord == "b":
                # quadratic pairings are sign-blind, so scale instead
                row[4 * dim + k] = field.add(field.one, field.one)
            rows.append(tuple(row))
    return tuple(rows)


def triple_form_matrix(field, n: int):
    """Form on Sigma_2 (+) Sigma_2-bar (+) Sigma_2-bar."""
    sigma = double_form_matrix(field, n)
    dim = len(sigma)
    M = [[field.zero] * (3 * dim) for _ in range(3 * dim)]
    for i in range(dim):
        for j in range(dim):
            M[i][j] = sigma[i][j]
            M[dim + i][dim + j] = field.neg(sigma[i][j])
            M[2 * dim + i][2 * dim + j] = field.neg(sigma[i][j])
    return tuple(tuple(r) for r in M)


def multiplication_graph_is_lagrangian(n: int, field=QQ,
                                       flip_sign_bug: bool = False) -> bool:
    rows = multiplication_graph_rows(field, n, flip_sign_bug=flip_sign_bug)
    return is_lagrangian_for_form(field, rows, triple_form_matrix(field, n))


def phi_matrix(field, n: int):
    """Matrix of Phi: (x, y) -> ((x + y)/2, J (x - y)) on F^{4n}."""
    dim = 2 * n
    J = symplectic_form_matrix(field, n)
    half = field.inv(field.of(2))
    M = [[field.zero] * (2 * dim) for _ in range(2 * dim)]
    for i in range(dim):
        M[i][i] = half
        M[i][dim + i] = half
        for j in range(dim):
            M[dim + i][j] = J[i][j]
            M[dim + i][dim + j] = field.neg(J[i][j])
    return tuple(tuple(r) for r in M)


def phi_map(g: PairGroupoidElement):
    """Chart point (u, xi) = ((x + y)/2, J(x - y)) of an arrow."""
    field = g.field
    n = len(g.x) // 2
    M = phi_matrix(field, n)
    return linalg.mat_vec(field, M, g.x + g.y)


def phi_inverse(field, chart_point) -> PairGroupoidElement:
    n = len(chart_point) // 4
    M_inv = linalg.inverse(field, phi_matrix(field, n))
    xy = linalg.mat_vec(field, M_inv, tuple(field.of(v) for v in chart_point))
    dim = 2 * n
    return PairGroupoidElement(field, xy[:dim], xy[dim:])


def phi_is_symplectomorphism(n: int, field=QQ, scale=None) -> bool:
    """Exact check of M^T sigma* M = sigma for the matrix M of Phi."""
    M = phi_matrix(field, n)
    if scale is not None:
        M = tuple(tuple(field.mul(field.of(scale), x) for x in row) for row in M)
    Mt = linalg.transpose(M)
    pulled = linalg.mat_mul(field, linalg.mat_mul(field, Mt, cotangent_form_matrix(field, n)), M)
    sigma = double_form_matrix(field, n)
    return all(
        field.eq(x, y) for pr, sr in zip(pulled, sigma) for x, y in zip(pr, sr)
    )


def vertical_polarization(n: int, field=QQ) -> Subspace:
    """Momentum (fiber) directions of the chart; Lagrangian for sigma*."""
    dim = 2 * n
    rows = []
    for i in range(dim):
        row = [field.zero] * (2 * dim)
        row[dim + i] = field.one
        rows.append(row)
    return Subspace(field, 2 * dim, rows)


def symplectic_potential(field, chart_point, tangent):
    """theta_P = -xi_i du^i contracted with a tangent vector of the chart."""
    dim = len(chart_point) // 2
    xi = chart_point[dim:]
    du = tangent[:dim]
    return field.neg(linalg.dot(field, xi, du))
