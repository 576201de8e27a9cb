import numpy as np
import pytest

from epistrict.epistricted import enumerate_pure_states, make_state
from epistrict.equivalence import (
    check_measurement_statistics,
    check_transformation_covariance,
    check_wigner_support,
    epistemic_to_quantum,
    stabilizer_projector_oracle,
    verify_finite_equivalence,
)
from epistrict.fields import GF
from epistrict.symplectic import (
    AffineSymplecticMap,
    Subspace,
    enumerate_isotropic,
    random_symplectic,
)
from epistrict.weyl import QuditSystem

F3 = GF(3)


def test_mapped_state_is_group_average_projector():
    """Independent oracle: the mapped state must equal the normalized
    group average sum_{f in V} omega^{-v(f)} W(-J f)."""
    system = QuditSystem(3)
    for st in enumerate_pure_states(F3, 1):
        rho = epistemic_to_quantum(system, st)
        P = stabilizer_projector_oracle(system, st)
        assert np.allclose(rho, P / np.trace(P).real, atol=1e-9)


def test_mapped_pure_states_are_rank_one():
    system = QuditSystem(3)
    for st in enumerate_pure_states(F3, 1):
        rho = epistemic_to_quantum(system, st)
        assert abs(np.trace(rho) - 1) < 1e-10
        assert abs(np.trace(rho @ rho) - 1) < 1e-9  # purity


def test_maximally_mixed_maps_to_identity():
    system = QuditSystem(3)
    st = make_state(Subspace(F3, 2), ())
    assert np.allclose(epistemic_to_quantum(system, st), np.eye(3) / 3, atol=1e-12)


def test_wigner_support_check_single_state():
    system = QuditSystem(3)
    st = make_state(Subspace(F3, 2, ((1, 2),)), (1,))
    rep = check_wigner_support(system, st)
    assert rep.passed and rep.max_error < 1e-12


def test_measurement_check_includes_posterior():
    system = QuditSystem(3)
    st = make_state(Subspace(F3, 2, ((1, 0),)), (0,))
    W = Subspace(F3, 2, ((0, 1),))
    rep = check_measurement_statistics(system, st, W)
    assert rep.passed
    # probability rows and posterior rows both counted
    assert rep.checks == 3 + 3


def test_covariance_check_with_displacement():
    system = QuditSystem(3)
    st = make_state(Subspace(F3, 2, ((1, 0),)), (0,))
    T = AffineSymplecticMap(F3, ((1, 0), (0, 1)), (1, 2))  # pure displacement
    rep = check_transformation_covariance(system, st, T)
    assert rep.passed and rep.max_error < 1e-12


def test_covariance_random_clifford():
    system = QuditSystem(3)
    st = make_state(Subspace(F3, 2, ((0, 1),)), (2,))
    for seed in range(6):
        T = random_symplectic(1, F3, seed=seed)
        assert check_transformation_covariance(system, st, T).passed


def test_detects_wrong_statistics():
    """Negative control: a deliberately shifted valuation must fail."""
    system = QuditSystem(3)
    st = make_state(Subspace(F3, 2, ((1, 0),)), (0,))
    wrong = make_state(Subspace(F3, 2, ((1, 0),)), (1,))
    rho_wrong = epistemic_to_quantum(system, wrong)
    rho_right = epistemic_to_quantum(system, st)
    assert not np.allclose(rho_wrong, rho_right, atol=1e-6)


def test_full_sweep_small():
    rep = verify_finite_equivalence(3, 1, n_random_transforms=2)
    assert rep.passed
    assert rep.checks > 100
    assert rep.max_error < 1e-12


def test_isotropic_measurement_of_mixed_states():
    system = QuditSystem(3, 1)
    mixed = make_state(Subspace(F3, 2), ())
    for W in enumerate_isotropic(1, F3, 1):
        rep = check_measurement_statistics(system, mixed, W)
        assert rep.passed
