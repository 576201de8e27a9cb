import itertools

import numpy as np
import pytest

from epistrict.weyl import (
    QuditSystem,
    equal_up_to_phase,
    is_projector,
    is_unitary,
    pvms_commute,
)

ATOL = 1e-10


def test_rejects_even_and_composite_dimension():
    for bad in (2, 4, 6, 9):
        with pytest.raises(ValueError):
            QuditSystem(bad)


def test_single_mode_generators_explicit():
    s = QuditSystem(3)
    X = s.weyl((1, 0))
    Z = s.weyl((0, 1))
    shift = np.zeros((3, 3))
    for x in range(3):
        shift[(x + 1) % 3, x] = 1
    assert np.allclose(X, shift, atol=ATOL)
    assert np.allclose(Z, np.diag([1, s.omega, s.omega ** 2]), atol=ATOL)
    assert np.allclose(s.weyl((0, 0)), np.eye(3), atol=ATOL)


@pytest.mark.parametrize("d,n", [(3, 1), (5, 1), (3, 2)])
def test_weyl_operators_unitary_and_adjoint(d, n):
    s = QuditSystem(d, n)
    for a in s.labels():
        W = s.weyl(a)
        assert is_unitary(W)
        neg = tuple((-x) % d for x in a)
        assert np.allclose(W.conj().T, s.weyl(neg), atol=ATOL)


@pytest.mark.parametrize("d", [3, 5])
def test_composition_phase_exhaustive(d):
    s = QuditSystem(d)
    for a in s.labels():
        for b in s.labels():
            lhs = s.weyl(a) @ s.weyl(b)
            tot = tuple((x + y) % d for x, y in zip(a, b))
            rhs = s.weyl_composition_phase(a, b) * s.weyl(tot)
            assert np.allclose(lhs, rhs, atol=ATOL)


def test_group_commutator_phase():
    s = QuditSystem(3)
    for a in s.labels():
        for b in s.labels():
            Wa, Wb = s.weyl(a), s.weyl(b)
            comm = Wb @ Wa @ Wb.conj().T @ Wa.conj().T
            phase = s.omega ** s.symplectic_product(a, b)
            assert np.allclose(comm, phase * np.eye(3), atol=ATOL)


def test_multi_mode_is_tensor_product():
    s2 = QuditSystem(3, 2)
    s1 = QuditSystem(3, 1)
    a, b = (1, 2), (2, 1)
    assert np.allclose(s2.weyl(a + b), np.kron(s1.weyl(a), s1.weyl(b)), atol=ATOL)


@pytest.mark.parametrize("d,n", [(3, 1), (5, 1), (3, 2)])
def test_transvections_generate_and_intertwine(d, n):
    s = QuditSystem(d, n)
    rng = np.random.default_rng(0)
    for _ in range(10):
        v = rng.integers(0, d, 2 * n)
        c = int(rng.integers(1, d))
        T = s.transvection_matrix(v, c)
        assert s.is_symplectic(T)
        U = s.transvection_unitary(v, c)
        assert is_unitary(U)
        for a in itertools.islice(s.labels(), 8):
            lhs = U @ s.weyl(a) @ U.conj().T
            rhs = s.weyl(tuple((T @ np.array(a)) % d))
            assert np.allclose(lhs, rhs, atol=ATOL)


def _random_symplectic_matrix(s, rng, n_factors=12):
    S = np.eye(2 * s.n, dtype=np.int64)
    for _ in range(n_factors):
        v = rng.integers(0, s.d, 2 * s.n)
        c = int(rng.integers(1, s.d))
        S = (s.transvection_matrix(v, c) @ S) % s.d
    return S


@pytest.mark.parametrize("d,n", [(3, 1), (5, 1), (7, 1), (3, 2)])
def test_clifford_decomposition_reconstructs(d, n):
    s = QuditSystem(d, n)
    rng = np.random.default_rng(1)
    for _ in range(8):
        S = _random_symplectic_matrix(s, rng)
        R = np.eye(2 * n, dtype=np.int64)
        for v, c in s.symplectic_transvections(S):
            R = (R @ s.transvection_matrix(v, c)) % d
        assert np.array_equal(R, S)


@pytest.mark.parametrize("d,n", [(3, 1), (5, 1), (3, 2)])
def test_clifford_covariance_no_residual_phase(d, n):
    s = QuditSystem(d, n)
    rng = np.random.default_rng(2)
    for _ in range(5):
        S = _random_symplectic_matrix(s, rng)
        U = s.clifford_unitary(S)
        assert is_unitary(U)
        for a in s.labels():
            lhs = U @ s.weyl(a) @ U.conj().T
            rhs = s.weyl(tuple((S @ np.array(a)) % d))
            assert np.allclose(lhs, rhs, atol=1e-9)


def test_clifford_is_projective_representation():
    s = QuditSystem(3)
    rng = np.random.default_rng(3)
    S1 = _random_symplectic_matrix(s, rng)
    S2 = _random_symplectic_matrix(s, rng)
    U12 = s.clifford_unitary((S1 @ S2) % 3)
    assert equal_up_to_phase(s.clifford_unitary(S1) @ s.clifford_unitary(S2), U12)


def test_position_pvm_is_computational_basis():
    s = QuditSystem(3)
    pvm = s.position_pvm()
    for k in range(3):
        e = np.zeros((3, 3))
        e[k, k] = 1
        assert np.allclose(pvm.projectors[k], e, atol=ATOL)
    assert pvm.completeness_defect() < ATOL


@pytest.mark.parametrize("d", [3, 5])
def test_quadrature_pvm_matches_spectral_oracle(d):
    """Projectors must coincide with the spectral family of W(u_f).

    Oracle: Pi(k) = d^{-1} sum_j omega^{-jk} W(j u_f), computed directly
    from the displacement operators, with the constant shifting labels.
    """
    s = QuditSystem(d)
    for coeffs in itertools.product(range(d), repeat=2):
        if coeffs == (0, 0):
            continue
        for const in range(d):
            pvm = s.quadrature_pvm(coeffs, const)
            assert pvm.completeness_defect() < ATOL
            u = np.array(pvm.weyl_label)
            for k, P in pvm.projectors.items():
                assert is_projector(P)
                j_sum = sum(
                    s.omega ** (-(j * ((k - const) % d)) % d)
                    * s.weyl(tuple((j * u) % d))
                    for j in range(d)
                ) / d
                assert np.allclose(P, j_sum, atol=1e-9)


def test_quadrature_pvm_rejects_zero_functional():
    with pytest.raises(ValueError):
        QuditSystem(3).quadrature_pvm((0, 0))


def test_joint_pvm_commuting_pair():
    s = QuditSystem(3, 2)
    rows = [(1, 0, 0, 0), (0, 0, 1, 0)]
    assert pvms_commute(s, rows)
    joint = s.joint_pvm(rows)
    total = sum(joint.values())
    assert np.allclose(total, np.eye(9), atol=ATOL)
    for P in joint.values():
        assert is_projector(P)
        assert abs(np.trace(P).real - 1.0) < ATOL  # Lagrangian -> rank 1


def test_joint_pvm_rejects_noncommuting():
    s = QuditSystem(3)
    with pytest.raises(ValueError):
        s.joint_pvm([(1, 0), (0, 1)])
