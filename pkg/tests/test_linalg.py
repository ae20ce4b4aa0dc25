import random

import numpy as np
import pytest
from hypothesis import given, strategies as st

from ermcodes import linalg
from ermcodes.errors import SingularMatrix
from ermcodes.galois import BaseField, ExtField


def _rand_matrix(rng, r, c, p):
    return [[rng.randrange(p) for _ in range(c)] for _ in range(r)]


matrices = st.integers(1, 6).flatmap(
    lambda r: st.integers(1, 6).flatmap(
        lambda c: st.lists(st.lists(st.integers(0, 6), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


@given(matrices)
def test_rank_plus_nullity(M):
    F = BaseField(7)
    ncols = len(M[0])
    assert linalg.rank(M, F) + len(linalg.nullspace(M, ncols, F)) == ncols


@given(matrices)
def test_nullspace_vectors_are_annihilated(M):
    F = BaseField(7)
    for v in linalg.nullspace(M, len(M[0]), F):
        assert all(x == 0 for x in linalg.matvec(M, v, F))


def test_rref_is_reduced():
    F = BaseField(5)
    R, piv = linalg.rref([[2, 4, 1], [1, 2, 3], [0, 0, 1]], F)
    assert piv == [0, 2]
    assert R == [[1, 2, 0], [0, 0, 1]]


def test_numpy_and_plain_paths_agree():
    rng = random.Random(3)
    F = BaseField(11)
    for _ in range(10):
        M = _rand_matrix(rng, 30, 40, 11)
        M[5] = [(2 * a + b) % 11 for a, b in zip(M[0], M[1])]
        big = linalg.rref(M, F)
        small = linalg._rref_prime(M, 11, 40)
        assert big == small


def test_generic_field_path_matches_prime_path():
    rng = random.Random(4)
    F = BaseField(5)
    for _ in range(20):
        M = _rand_matrix(rng, 4, 5, 5)
        assert linalg._rref_generic([list(r) for r in M], F, 5) == linalg._rref_prime(M, 5, 5)


def test_solve_and_inconsistent():
    F = BaseField(7)
    x, nullity = linalg.solve([[1, 2], [3, 4]], [5, 6], F)
    assert linalg.matvec([[1, 2], [3, 4]], x, F) == [5, 6] and nullity == 0
    x, _ = linalg.solve([[1, 1], [2, 2]], [1, 3], F)
    assert x is None


def test_inverse_and_singular():
    F = BaseField(7)
    A = [[1, 2], [3, 4]]
    assert linalg.matmul(A, linalg.inverse(A, F), F) == linalg.identity(2, F)
    with pytest.raises(SingularMatrix):
        linalg.inverse([[1, 2], [2, 4]], F)


def test_linear_algebra_over_extension_field():
    F = BaseField(3)
    L = ExtField(F, 2)
    rng = random.Random(1)
    A = [[L.random(rng) for _ in range(3)] for _ in range(3)]
    if linalg.rank(A, L) == 3:
        Ainv = linalg.inverse(A, L)
        assert linalg.matmul(A, Ainv, L) == linalg.identity(3, L)
    B = [A[0], A[1], [L.add(a, b) for a, b in zip(A[0], A[1])]]
    assert linalg.rank(B, L) <= 2


@pytest.mark.parametrize("p", [2, 5, 7])
def test_batch_rank_matches_rref(p):
    rng = np.random.default_rng(p)
    mats = rng.integers(0, p, size=(300, 4, 6))
    mats[::7, 3] = (mats[::7, 0] + mats[::7, 1]) % p
    mats[::11] = 0
    F = BaseField(p)
    expected = [linalg.rank(m.tolist(), F) for m in mats]
    assert linalg.batch_rank_mod_p(mats, p).tolist() == expected
