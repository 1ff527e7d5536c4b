"""Exact linear algebra over GF(p) and Z.

GF(2) matrices are bit-packed into uint64 words for elimination; other
prime fields use int64 residues (p < 2^31 keeps products inside int64).
Integer routines work on Python ints (fraction-free Bareiss for
determinants, rational Gauss-Jordan for kernels and inverses).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

import numpy as np

from grcodes.errors import NoRightInverseError


@dataclass
class RrefResult:
    reduced: np.ndarray
    rank: int
    pivot_columns: list[int]


# -- bit packing ----------------------------------------------------------------


def pack_rows(M) -> np.ndarray:
    """Pack a 0/1 matrix into uint64 words, column ``j`` -> bit ``j % 64`` of word ``j // 64``."""
    M = np.asarray(M)
    if M.ndim == 1:
        M = M[None, :]
    m, n = M.shape
    words = max(1, (n + 63) // 64)
    padded = np.zeros((m, words * 64), dtype=np.uint8)
    padded[:, :n] = M.astype(np.uint8) & 1
    packed = np.packbits(padded, axis=1, bitorder="little")
    return np.ascontiguousarray(packed).view("<u8").astype(np.uint64)


def unpack_rows(P: np.ndarray, n: int) -> np.ndarray:
    P = np.ascontiguousarray(P.astype("<u8"))
    bits = np.unpackbits(P.view(np.uint8), axis=1, bitorder="little")
    return bits[:, :n].astype(np.int64)


def _rref_gf2(M: np.ndarray) -> RrefResult:
    m, n = M.shape
    P = pack_rows(M) if m else np.zeros((0, 1), dtype=np.uint64)
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        w = c >> 6
        bit = np.uint64(1) << np.uint64(c & 63)
        below = np.flatnonzero(P[r:, w] & bit)
        if below.size == 0:
            continue
        piv = r + int(below[0])
        if piv != r:
            P[[r, piv]] = P[[piv, r]]
        hits = np.flatnonzero(P[:, w] & bit)
        hits = hits[hits != r]
        if hits.size:
            P[hits] ^= P[r]
        pivots.append(c)
        r += 1
    return RrefResult(unpack_rows(P, n) if m else np.zeros((0, n), np.int64), r, pivots)


def _rref_modp(M: np.ndarray, p: int) -> RrefResult:
    A = np.mod(np.array(M, dtype=np.int64), p)
    m, n = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        below = np.flatnonzero(A[r:, c])
        if below.size == 0:
            continue
        piv = r + int(below[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = A[r] * pow(int(A[r, c]), -1, p) % p
        f = A[:, c].copy()
        f[r] = 0
        hits = np.flatnonzero(f)
        if hits.size:
            A[hits] = (A[hits] - f[hits, None] * A[r]) % p
        pivots.append(c)
        r += 1
    return RrefResult(A, r, pivots)


def _as_matrix(M, p: int) -> np.ndarray:
    A = np.asarray(M)
    if A.ndim == 1:
        A = A[None, :]
    if A.dtype == object:
        A = np.array([[int(x) % p for x in row] for row in A], dtype=np.int64).reshape(A.shape)
    return np.mod(A.astype(np.int64), p)


def rref(M, p: int) -> RrefResult:
    """Reduced row-echelon form over GF(p).

    Pivots are the leftmost available columns, swapped up from the smallest
    row index, so the result is deterministic.
    """
    A = _as_matrix(M, p)
    return _rref_gf2(A) if p == 2 else _rref_modp(A, p)


def rank(M, p: int) -> int:
    A = _as_matrix(M, p)
    if A.size == 0:
        return 0
    return rref(A, p).rank


def null_space(M, p: int) -> np.ndarray:
    """Basis of ``{x : M x = 0}`` as the rows of a ``(ncols - rank) x ncols`` array.

    One vector per free column of the RREF, in increasing column order, with
    a 1 in its own free column.
    """
    A = _as_matrix(M, p)
    n = A.shape[1]
    res = rref(A, p)
    R = res.reduced
    free = [c for c in range(n) if c not in set(res.pivot_columns)]
    K = np.zeros((len(free), n), dtype=np.int64)
    for t, f in enumerate(free):
        K[t, f] = 1
        for i, pc in enumerate(res.pivot_columns):
            K[t, pc] = (-R[i, f]) % p
    return K


def left_null_space(M, p: int) -> np.ndarray:
    """Basis of ``{x : x M = 0}`` as rows."""
    return null_space(np.asarray(M).T, p)


def independent_rows(M, p: int) -> list[int]:
    """Greedy scan: indices of rows each independent of the rows kept before it."""
    A = _as_matrix(M, p)
    if A.shape[0] == 0:
        return []
    return rref(A.T, p).pivot_columns


def right_inverse(M, p: int) -> np.ndarray:
    """``n x r`` matrix ``C`` with ``M C = I_r`` for a full-row-rank ``r x n`` ``M``.

    Free variables are set to zero.
    """
    A = _as_matrix(M, p)
    r, n = A.shape
    aug = np.concatenate([A, np.eye(r, dtype=np.int64)], axis=1)
    res = rref(aug, p)
    pivots = [c for c in res.pivot_columns if c < n]
    if len(pivots) < r:
        raise NoRightInverseError(f"matrix has rank {len(pivots)} < {r} rows", certificate=len(pivots))
    E = res.reduced[:r, n:]
    C = np.zeros((n, r), dtype=np.int64)
    C[pivots, :] = E
    return C


def inverse(M, p: int) -> np.ndarray:
    A = _as_matrix(M, p)
    if A.shape[0] != A.shape[1]:
        raise ValueError("inverse needs a square matrix")
    return right_inverse(A, p)


def matmul(A, B, p: int) -> np.ndarray:
    A = _as_matrix(A, p)
    B = _as_matrix(B, p)
    if p * p * max(1, A.shape[1]) < 1 << 52:
        # float64 products are exact here and go through BLAS
        return np.rint(A.astype(np.float64) @ B.astype(np.float64)).astype(np.int64) % p
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    # chunk the inner dimension so partial sums stay below 2^63
    step = max(1, (1 << 62) // (p * p))
    for s in range(0, A.shape[1], step):
        out = (out + A[:, s : s + step] @ B[s : s + step, :]) % p
    return out


def row_space_equal(A, B, p: int) -> bool:
    A = _as_matrix(A, p)
    B = _as_matrix(B, p)
    if A.shape[1] != B.shape[1]:
        return False
    ra, rb = rref(A, p), rref(B, p)
    if ra.rank != rb.rank:
        return False
    return bool(np.array_equal(ra.reduced[: ra.rank], rb.reduced[: rb.rank]))


def in_row_space(y, A, p: int) -> bool:
    A = _as_matrix(A, p)
    y = _as_matrix(y, p)
    return rank(np.concatenate([A, y]), p) == rank(A, p)


# -- integers ------------------------------------------------------------------


def det_integer(M) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    A = [[int(x) for x in row] for row in np.asarray(M, dtype=object)]
    n = len(A)
    if n == 0:
        return 1
    if any(len(row) != n for row in A):
        raise ValueError("determinant needs a square matrix")
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def _rref_rational(M) -> tuple[list[list[Fraction]], list[int]]:
    A = [[Fraction(int(x)) for x in row] for row in np.asarray(M, dtype=object)]
    m = len(A)
    n = len(A[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        piv = next((i for i in range(r, m) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(m):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
    return A, pivots


def integer_null_space(M) -> list[list[int]]:
    """Primitive integer vectors spanning the rational kernel ``{x : M x = 0}``."""
    A = np.asarray(M, dtype=object)
    n = A.shape[1]
    R, pivots = _rref_rational(A)
    out = []
    for f in (c for c in range(n) if c not in set(pivots)):
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for i, pc in enumerate(pivots):
            x[pc] = -R[i][f]
        scale = lcm(*(v.denominator for v in x))
        ints = [int(v * scale) for v in x]
        g = 0
        for v in ints:
            g = gcd(g, v)
        out.append([v // g for v in ints])
    return out


def integer_inverse(M) -> np.ndarray:
    """Inverse of an integer matrix with determinant +-1 (entries stay integral)."""
    A = np.asarray(M, dtype=object)
    n = A.shape[0]
    aug = np.concatenate([A, np.eye(n, dtype=int).astype(object)], axis=1)
    R, pivots = _rref_rational(aug)
    if pivots[:n] != list(range(n)):
        raise NoRightInverseError("matrix is singular")
    out = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            v = R[i][n + j]
            if v.denominator != 1:
                raise NoRightInverseError("inverse is not integral")
            out[i, j] = int(v)
    return out
