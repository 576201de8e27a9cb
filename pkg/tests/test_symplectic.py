import random

import pytest

from epistrict import linalg
from epistrict.fields import GF, QQ
from epistrict.symplectic import (
    AffineSymplecticMap,
    QuadratureFunctional,
    Subspace,
    enumerate_isotropic,
    enumerate_lagrangian,
    fourier_generator,
    functional,
    is_isotropic,
    is_lagrangian,
    is_symplectic_matrix,
    omega_complement,
    p_functional,
    poisson_bracket_oracle,
    q_functional,
    random_symplectic,
    scaling_generator,
    shear_generator,
    sum_generator,
    swap_generator,
    symplectic_form_matrix,
    symplectic_product,
)

F3 = GF(3)
F5 = GF(5)


def test_form_matrix_blocks():
    J = symplectic_form_matrix(QQ, 2)
    assert J[0][1] == 1 and J[1][0] == -1
    assert J[2][3] == 1 and J[3][2] == -1
    assert all(J[i][j] == 0 for i in range(4) for j in range(4)
               if {i, j} not in ({0, 1}, {2, 3}))


def test_canonical_bracket():
    # {q_i, p_j} = delta_ij, {q,q} = {p,p} = 0
    for n in (1, 2, 3):
        for i in range(n):
            for j in range(n):
                q_i, p_j = q_functional(QQ, n, i), p_functional(QQ, n, j)
                want = QQ.one if i == j else QQ.zero
                assert symplectic_product(q_i, p_j) == want
                assert symplectic_product(q_i, q_functional(QQ, n, j)) == 0
                assert symplectic_product(p_functional(QQ, n, i), p_j) == 0


@pytest.mark.parametrize("field", [QQ, F3, F5])
def test_product_matches_derivative_oracle(field):
    rng = random.Random(11)
    for _ in range(30):
        n = rng.randint(1, 3)
        f = functional(field, [rng.randint(-6, 6) for _ in range(2 * n)])
        g = functional(field, [rng.randint(-6, 6) for _ in range(2 * n)])
        assert symplectic_product(f, g) == poisson_bracket_oracle(f, g)
        # antisymmetry
        assert symplectic_product(f, g) == field.neg(symplectic_product(g, f))


def test_functional_evaluation_includes_constant():
    f = functional(F3, (1, 2), constant=2)
    assert f.evaluate((1, 1)) == (1 + 2 + 2) % 3


def test_subspace_canonicalization_and_membership():
    V1 = Subspace(QQ, 4, ((1, 2, 0, 0), (0, 0, 1, 1)))
    V2 = Subspace(QQ, 4, ((2, 4, 2, 2), (0, 0, 3, 3)))
    assert V1 == V2 and hash(V1) == hash(V2)
    assert V1.contains((1, 2, 1, 1))
    assert not V1.contains((1, 0, 0, 0))


def test_sum_intersection_dimension_formula():
    rng = random.Random(5)
    for _ in range(20):
        A = Subspace(F5, 4, tuple(
            tuple(rng.randrange(5) for _ in range(4)) for _ in range(2)))
        B = Subspace(F5, 4, tuple(
            tuple(rng.randrange(5) for _ in range(4)) for _ in range(2)))
        assert A.add(B).dim + A.intersect(B).dim == A.dim + B.dim


def test_omega_complement_dimensions_and_involution():
    V = Subspace(F3, 4, ((1, 0, 0, 0),))
    W = omega_complement(V)
    assert W.dim == 3
    assert omega_complement(W) == V
    # a vector is omega-orthogonal to V iff in the complement
    assert W.contains((1, 0, 0, 0))  # <q1, q1> = 0
    assert not W.contains((0, 1, 0, 0))


def test_isotropic_lagrangian_classification():
    q_line = Subspace(F3, 2, ((1, 0),))
    assert is_isotropic(q_line) and is_lagrangian(q_line)
    whole = Subspace(F3, 2, ((1, 0), (0, 1)))
    assert not is_isotropic(whole)
    # two commuting functionals in two modes: isotropic but not Lagrangian
    half = Subspace(F3, 4, ((1, 0, 0, 0),))
    assert is_isotropic(half) and not is_lagrangian(half)


@pytest.mark.parametrize("field", [F3, F5, QQ])
def test_generators_are_symplectic(field):
    for gen in (fourier_generator(field, 2, 0),
                shear_generator(field, 2, 1, field.of(2)),
                scaling_generator(field, 2, 0, field.of(2)),
                sum_generator(field, 2, 0, 1, field.of(1)),
                swap_generator(field, 2, 0, 1)):
        assert is_symplectic_matrix(field, gen)


def test_affine_map_validation_and_inverse():
    with pytest.raises(ValueError):
        AffineSymplecticMap(F3, ((1, 1), (1, 1)))
    T = AffineSymplecticMap(F3, ((1, 1), (0, 1)), (2, 0))
    point = (1, 2)
    assert T.inverse().apply(T.apply(point)) == tuple(F3.of(x) for x in point)


def test_compose_order():
    S = AffineSymplecticMap(F3, ((0, 2), (1, 0)))  # scaled fourier
    T = AffineSymplecticMap(F3, ((1, 1), (0, 1)), (1, 0))
    point = (2, 1)
    assert T.compose(S).apply(point) == T.apply(S.apply(point))


def test_random_symplectic_is_symplectic_and_deterministic():
    for seed in range(5):
        T1 = random_symplectic(2, F5, seed=seed)
        T2 = random_symplectic(2, F5, seed=seed)
        assert T1.S == T2.S and T1.a == T2.a
        assert is_symplectic_matrix(F5, T1.S)
    assert random_symplectic(2, F5, seed=0).S != random_symplectic(2, F5, seed=1).S


def test_lagrangian_counts_single_mode():
    # number of Lagrangian lines in Z_d^2 is d + 1
    assert len(enumerate_lagrangian(1, F3)) == 4
    assert len(enumerate_lagrangian(1, F5)) == 6


def test_lagrangian_count_two_modes():
    # |Sp(4, Z_3)| / |stabilizer| = (3^2 + 1)(3 + 1) * 3^... = 40 planes
    planes = enumerate_lagrangian(2, F3)
    assert len(planes) == 40
    assert all(is_lagrangian(V) for V in planes)
    assert len(set(planes)) == 40


def test_enumerate_isotropic_by_dimension():
    lines = enumerate_isotropic(1, F3, 1)
    assert len(lines) == 4
    assert enumerate_isotropic(1, F3, 0) == [Subspace(F3, 2)]
