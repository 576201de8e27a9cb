import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from epistrict import linalg
from epistrict.fields import GF, QQ

F5 = GF(5)


def rand_matrix(field, rng, m, n, span=9):
    return tuple(
        tuple(field.of(rng.randint(-span, span)) for _ in range(n))
        for _ in range(m)
    )


def test_identity_and_multiply():
    I = linalg.identity(QQ, 3)
    A = linalg.mat(QQ, [[1, 2, 3], [0, 1, 4], [5, 6, 0]])
    assert linalg.mat_mul(QQ, A, I) == A
    assert linalg.mat_mul(QQ, I, A) == A


def test_inverse_exact_rational():
    A = linalg.mat(QQ, [[1, 2, 3], [0, 1, 4], [5, 6, 0]])
    Ainv = linalg.inverse(QQ, A)
    assert linalg.mat_mul(QQ, A, Ainv) == linalg.identity(QQ, 3)
    # the classic exact inverse: entries are integers here
    assert Ainv[0] == (Fraction(-24), Fraction(18), Fraction(5))


def test_inverse_singular_raises():
    A = linalg.mat(QQ, [[1, 2], [2, 4]])
    with pytest.raises(ValueError):
        linalg.inverse(QQ, A)


@pytest.mark.parametrize("field", [QQ, F5])
def test_rref_is_idempotent_and_rank_additive(field):
    rng = random.Random(42)
    for _ in range(25):
        A = rand_matrix(field, rng, rng.randint(1, 5), rng.randint(1, 5))
        R, pivots = linalg.rref(field, A)
        R2, pivots2 = linalg.rref(field, R)
        assert R == R2 and pivots == pivots2
        assert len(pivots) == linalg.rank(field, A)


@pytest.mark.parametrize("field", [QQ, F5])
def test_kernel_vectors_annihilate(field):
    rng = random.Random(7)
    for _ in range(25):
        m, n = rng.randint(1, 4), rng.randint(1, 5)
        A = rand_matrix(field, rng, m, n)
        K = linalg.kernel(field, A)
        assert len(K) == n - linalg.rank(field, A)
        for v in K:
            assert linalg.is_zero_vec(field, linalg.mat_vec(field, A, v))


@pytest.mark.parametrize("field", [QQ, F5])
def test_solve_recovers_constructed_solution(field):
    rng = random.Random(3)
    for _ in range(25):
        m, n = rng.randint(1, 4), rng.randint(1, 5)
        A = rand_matrix(field, rng, m, n)
        x = tuple(field.of(rng.randint(-5, 5)) for _ in range(n))
        b = linalg.mat_vec(field, A, x)
        sol = linalg.solve(field, A, b)
        assert sol is not None
        assert linalg.mat_vec(field, A, sol) == b


def test_solve_detects_inconsistency():
    A = linalg.mat(QQ, [[1, 1], [1, 1]])
    assert linalg.solve(QQ, A, linalg.vec(QQ, [0, 1])) is None


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(-9, 9), min_size=3, max_size=3),
                min_size=1, max_size=4))
def test_rank_invariant_under_transpose(entries):
    A = linalg.mat(QQ, entries)
    assert linalg.rank(QQ, A) == linalg.rank(QQ, linalg.transpose(A))
