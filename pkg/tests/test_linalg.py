from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grcodes import linalg
from grcodes.errors import NoRightInverseError


def cofactor_det(M) -> int:
    M = [list(map(int, r)) for r in M]
    n = len(M)
    if n == 0:
        return 1
    if n == 1:
        return M[0][0]
    return sum(
        (-1) ** j * M[0][j] * cofactor_det([row[:j] + row[j + 1 :] for row in M[1:]]) for j in range(n)
    )


def brute_rank(M, p) -> int:
    """Rank as log_p of the row-space size (tiny matrices only)."""
    M = np.asarray(M) % p
    m = M.shape[0]
    words = {tuple((np.array(c) @ M) % p) for c in itertools.product(range(p), repeat=m)}
    r = 0
    while p**r < len(words):
        r += 1
    return r


def matrices(p, max_rows=6, max_cols=8):
    return st.integers(1, max_rows).flatmap(
        lambda m: st.integers(1, max_cols).flatmap(
            lambda n: st.lists(st.integers(0, p - 1), min_size=m * n, max_size=m * n).map(
                lambda v: np.array(v, dtype=np.int64).reshape(m, n)
            )
        )
    )


def test_rref_examples():
    res = linalg.rref(np.eye(4, dtype=int), 2)
    assert res.rank == 4 and np.array_equal(res.reduced, np.eye(4))
    res = linalg.rref([[1, 1], [1, 1]], 2)
    assert res.rank == 1
    assert res.reduced.tolist() == [[1, 1], [0, 0]]
    assert res.pivot_columns == [0]


def test_null_space_examples():
    assert linalg.null_space(np.eye(3, dtype=int), 2).shape == (0, 3)
    assert linalg.null_space([[1, 1], [1, 1]], 2).tolist() == [[1, 1]]


def test_right_inverse_examples():
    assert np.array_equal(linalg.right_inverse(np.eye(3, dtype=int), 5), np.eye(3))
    assert linalg.right_inverse([[1, 1]], 2).tolist() == [[1], [0]]
    with pytest.raises(NoRightInverseError):
        linalg.right_inverse([[1, 1], [1, 1]], 2)


def test_right_inverse_gf5():
    rng = np.random.default_rng(5)
    for _ in range(20):
        M = rng.integers(0, 5, (3, 5))
        if linalg.rank(M, 5) < 3:
            continue
        C = linalg.right_inverse(M, 5)
        assert np.array_equal((M @ C) % 5, np.eye(3))


def test_det_examples():
    assert linalg.det_integer(np.eye(3, dtype=int)) == 1
    assert linalg.det_integer([[1, 1], [1, 1]]) == 0
    rng = np.random.default_rng(4)
    for _ in range(50):
        M = rng.integers(-5, 6, (4, 4))
        assert linalg.det_integer(M) == cofactor_det(M)


def test_det_needs_row_swap():
    assert linalg.det_integer([[0, 1], [1, 0]]) == -1
    assert linalg.det_integer([[0, 0, 1], [0, 1, 0], [1, 0, 0]]) == -1


def test_pack_round_trip():
    rng = np.random.default_rng(0)
    for n in (1, 63, 64, 65, 130):
        M = rng.integers(0, 2, (5, n))
        assert np.array_equal(linalg.unpack_rows(linalg.pack_rows(M), n), M)


@pytest.mark.parametrize("p", [2, 3, 5])
@settings(max_examples=60, deadline=None, derandomize=True)
@given(data=st.data())
def test_rref_properties(p, data):
    M = data.draw(matrices(p, 4, 6))
    res = linalg.rref(M, p)
    R = res.reduced
    assert res.rank == len(res.pivot_columns)
    for i, c in enumerate(res.pivot_columns):
        col = np.zeros(R.shape[0], dtype=np.int64)
        col[i] = 1
        assert np.array_equal(R[:, c], col)
    assert not R[res.rank :].any()
    assert linalg.row_space_equal(R, M, p)
    assert res.rank == brute_rank(M, p)
    K = linalg.null_space(M, p)
    assert K.shape[0] == M.shape[1] - res.rank
    assert not ((M @ K.T) % p).any()
    if K.shape[0]:
        assert linalg.rank(K, p) == K.shape[0]


def test_matmul_large_prime():
    p = 2_147_483_647
    rng = np.random.default_rng(1)
    A = rng.integers(0, p, (3, 4))
    B = rng.integers(0, p, (4, 2))
    ref = [[sum(int(A[i, k]) * int(B[k, j]) for k in range(4)) % p for j in range(2)] for i in range(3)]
    assert linalg.matmul(A, B, p).tolist() == ref


def test_integer_null_space_and_inverse():
    M = np.array([[1, 2], [2, 4]], dtype=object)
    (x,) = linalg.integer_null_space(M)
    assert x in ([-2, 1], [2, -1])
    U = np.array([[2, 1], [1, 1]], dtype=object)
    Ui = linalg.integer_inverse(U)
    assert (U.dot(Ui) == np.eye(2, dtype=int)).all()
    with pytest.raises(NoRightInverseError):
        linalg.integer_inverse(np.array([[2, 0], [0, 1]], dtype=object))
