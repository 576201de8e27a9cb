import random
from fractions import Fraction

import pytest

from epistrict import linalg
from epistrict.fields import GF, QQ
from epistrict.groupoid import (
    NotComposableError,
    PairGroupoidElement,
    compose,
    cotangent_form_matrix,
    double_form_matrix,
    form_value,
    inverse,
    is_composable,
    multiplication_graph_is_lagrangian,
    multiplication_graph_rows,
    phi_inverse,
    phi_is_symplectomorphism,
    phi_map,
    phi_matrix,
    source,
    symplectic_potential,
    target,
    triple_form_matrix,
    unit,
    vertical_polarization,
)
from epistrict.symplectic import is_lagrangian


def rand_point(rng, n):
    return tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 7))
                 for _ in range(2 * n))


def test_composition_axioms_exact():
    rng = random.Random(0)
    for _ in range(100):
        n = rng.randint(1, 3)
        a, b, c, e = (rand_point(rng, n) for _ in range(4))
        g = PairGroupoidElement(QQ, a, b)
        h = PairGroupoidElement(QQ, b, c)
        k = PairGroupoidElement(QQ, c, e)
        assert compose(compose(g, h), k) == compose(g, compose(h, k))
        assert compose(g, unit(QQ, b)) == g
        assert compose(unit(QQ, a), g) == g
        assert compose(g, inverse(g)) == unit(QQ, a)
        assert compose(inverse(g), g) == unit(QQ, b)
        assert source(g) == g.y and target(g) == g.x


def test_non_composable_pairs_rejected():
    g = PairGroupoidElement(QQ, (1, 0), (0, 1))
    h = PairGroupoidElement(QQ, (2, 2), (0, 0))
    assert not is_composable(g, h)
    with pytest.raises(NotComposableError):
        compose(g, h)


def test_double_form_is_difference_of_symplectic_products():
    # sigma((x,y),(z,w)) = <x,z> - <y,w>
    rng = random.Random(1)
    from epistrict.symplectic import functional, symplectic_product
    for _ in range(20):
        n = rng.randint(1, 2)
        x, y, z, w = (rand_point(rng, n) for _ in range(4))
        sigma = double_form_matrix(QQ, n)
        lhs = form_value(QQ, sigma, x + y, z + w)
        f = lambda v, u: symplectic_product(functional(QQ, v), functional(QQ, u))
        assert lhs == f(x, z) - f(y, w)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_multiplication_graph_lagrangian(n):
    assert multiplication_graph_is_lagrangian(n, QQ)


def test_multiplication_graph_negative_control():
    # breaking the middle-slot embedding destroys isotropy
    assert not multiplication_graph_is_lagrangian(1, QQ, flip_sign_bug=True)


def test_multiplication_graph_dimension():
    rows = multiplication_graph_rows(QQ, 2)
    assert linalg.rank(QQ, rows) == 3 * (2 * 2)  # half of 6 * 2n


@pytest.mark.parametrize("n", [1, 2, 3])
def test_phi_symplectomorphism_and_negative_control(n):
    assert phi_is_symplectomorphism(n, QQ)
    assert not phi_is_symplectomorphism(n, QQ, scale=2)


def test_phi_round_trip_and_explicit_value():
    g = PairGroupoidElement(QQ, (1, 0), (0, 0))
    u_xi = phi_map(g)
    # midpoint (1/2, 0); J(x - y) = J(1,0) = (0, -1)
    assert u_xi == (Fraction(1, 2), Fraction(0), Fraction(0), Fraction(-1))
    back = phi_inverse(QQ, u_xi)
    assert back == g


def test_phi_works_over_odd_prime_fields_too():
    # 1/2 exists mod d for odd d, so the chart transfers verbatim
    F5 = GF(5)
    assert phi_is_symplectomorphism(1, F5)
    g = PairGroupoidElement(F5, (1, 0), (0, 0))
    assert phi_inverse(F5, phi_map(g)) == g


def test_vertical_polarization_is_lagrangian_for_chart_form():
    from epistrict.groupoid import is_lagrangian_for_form
    for n in (1, 2):
        P = vertical_polarization(n, QQ)
        assert P.dim == 2 * n
        assert is_lagrangian_for_form(QQ, P.rows, cotangent_form_matrix(QQ, n))


def test_symplectic_potential_contracts_fiber_coordinate():
    # theta at (u, xi) applied to tangent (w_u, w_xi) is -xi . w_u
    chart = (Fraction(1), Fraction(2), Fraction(3), Fraction(-1))
    tangent = (Fraction(1), Fraction(0), Fraction(9), Fraction(9))
    assert symplectic_potential(QQ, chart, tangent) == -3
    # independent of the xi-part of the tangent
    tangent2 = (Fraction(1), Fraction(0), Fraction(-4), Fraction(7))
    assert symplectic_potential(QQ, chart, tangent2) == -3


def test_exterior_derivative_of_potential_is_chart_form():
    """d(theta_P) = sigma* for the constant chart: check on basis pairs.

    For theta(m)[w] = -xi . w_u (linear in the base point m), the exterior
    derivative on constant vector fields v, w is v[theta(w)] - w[theta(v)],
    i.e. theta_lin(v)[w] - theta_lin(w)[v] where theta_lin is linear in m.
    """
    n = 2
    dim = 4 * n
    sigma_star = cotangent_form_matrix(QQ, n)

    def theta_at(m, w):
        return symplectic_potential(QQ, m, w)

    basis = [tuple(QQ.one if i == j else QQ.zero for j in range(dim))
             for i in range(dim)]
    for i, v in enumerate(basis):
        for j, w in enumerate(basis):
            dtheta = theta_at(v, w) - theta_at(w, v)
            assert dtheta == form_value(QQ, sigma_star, v, w)
