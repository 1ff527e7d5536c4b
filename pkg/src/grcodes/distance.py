"""Exact minimum distance by Gray-code enumeration of the message space.

Over GF(2) successive Gray codes differ in one bit, so each step is a single
row XOR on the bit-packed current codeword. Over GF(p) the modular p-ary
Gray code changes one digit by +1 per step, i.e. one row addition mod p.
The message range splits into contiguous blocks that workers scan
independently; the overall minimum does not depend on the split.
"""

from __future__ import annotations

import itertools
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numba
import numpy as np

from grcodes import linalg
from grcodes.errors import ResourceCapError

DEFAULT_CAP = 36
CAP_ENV = "GRCODES_DISTANCE_CAP"

_M1 = np.uint64(0x5555555555555555)
_M2 = np.uint64(0x3333333333333333)
_M4 = np.uint64(0x0F0F0F0F0F0F0F0F)
_H01 = np.uint64(0x0101010101010101)


@numba.njit(cache=True, nogil=True, inline="always")
def _popcount(x):
    x = x - ((x >> np.uint64(1)) & _M1)
    x = (x & _M2) + ((x >> np.uint64(2)) & _M2)
    x = (x + (x >> np.uint64(4))) & _M4
    return np.int64((x * _H01) >> np.uint64(56))


@numba.njit(cache=True, nogil=True)
def _ctz(t):
    b = 0
    while (t & 1) == 0:
        t >>= 1
        b += 1
    return b


@numba.njit(cache=True, nogil=True)
def _gf2_single_word(rows, start, stop):
    k = rows.shape[0]
    g = start ^ (start >> 1)
    cur = np.uint64(0)
    for i in range(k):
        if (g >> i) & 1:
            cur ^= rows[i]
    best = np.int64(1 << 62)
    if start > 0:
        best = _popcount(cur)
    for t in range(start + 1, stop):
        cur ^= rows[_ctz(t)]
        w = _popcount(cur)
        if w < best:
            best = w
    return best


@numba.njit(cache=True, nogil=True)
def _gf2_multi_word(rows, start, stop):
    k, nw = rows.shape
    g = start ^ (start >> 1)
    cur = np.zeros(nw, dtype=np.uint64)
    for i in range(k):
        if (g >> i) & 1:
            for w in range(nw):
                cur[w] ^= rows[i, w]
    best = np.int64(1 << 62)
    if start > 0:
        s = 0
        for w in range(nw):
            s += _popcount(cur[w])
        best = s
    for t in range(start + 1, stop):
        b = _ctz(t)
        s = 0
        for w in range(nw):
            cur[w] ^= rows[b, w]
            s += _popcount(cur[w])
        if s < best:
            best = s
    return best


@numba.njit(cache=True, nogil=True)
def _gfp_range(rows, p, start, stop):
    k, n = rows.shape
    digits = np.zeros(k + 1, dtype=np.int64)
    t = start
    for i in range(k):
        digits[i] = t % p
        t //= p
    cur = np.zeros(n, dtype=np.int64)
    for i in range(k):
        gi = (digits[i] - digits[i + 1]) % p
        if gi:
            for j in range(n):
                cur[j] = (cur[j] + gi * rows[i, j]) % p
    best = np.int64(1 << 62)
    if start > 0:
        s = 0
        for j in range(n):
            if cur[j] != 0:
                s += 1
        best = s
    for t in range(start + 1, stop):
        b = 0
        tt = t
        while tt % p == 0:
            tt //= p
            b += 1
        s = 0
        for j in range(n):
            v = cur[j] + rows[b, j]
            if v >= p:
                v -= p
            cur[j] = v
            if v != 0:
                s += 1
        if s < best:
            best = s
    return best


def distance_cap() -> int:
    """Message-space cap in bits (``k log2 p``), overridable via ``GRCODES_DISTANCE_CAP``."""
    return int(os.environ.get(CAP_ENV, DEFAULT_CAP))


def _basis(generator, p: int) -> np.ndarray:
    res = linalg.rref(generator, p)
    if res.rank == 0:
        raise ValueError("the zero code has no minimum distance")
    return res.reduced[: res.rank]


def min_distance(generator, p: int, *, cap: int | None = None, threads: int = 1) -> int:
    """Exact minimum Hamming weight over all nonzero codewords of the row space.

    Dependent generator rows are reduced away first. Raises
    :class:`ResourceCapError` when ``k log2 p`` exceeds ``cap`` (default
    :func:`distance_cap`); use :func:`estimate_distance` there instead.
    """
    B = _basis(generator, p)
    k = B.shape[0]
    cap = distance_cap() if cap is None else cap
    bits = k * math.log2(p)
    if bits > cap + 1e-9:
        raise ResourceCapError(
            f"exact distance needs {p}^{k} codewords (cap 2^{cap}); "
            "use estimate_distance for a labeled upper bound"
        )
    total = p**k
    threads = max(1, int(threads))
    bounds = [total * i // threads for i in range(threads + 1)]
    ranges = [(bounds[i], bounds[i + 1]) for i in range(threads) if bounds[i] < bounds[i + 1]]
    if p == 2:
        P = linalg.pack_rows(B)
        if P.shape[1] == 1:
            rows = np.ascontiguousarray(P[:, 0])

            def work(r):
                return _gf2_single_word(rows, r[0], r[1])

        else:

            def work(r):
                return _gf2_multi_word(P, r[0], r[1])

    else:
        rows = np.ascontiguousarray(B.astype(np.int64))

        def work(r):
            return _gfp_range(rows, p, r[0], r[1])

    if len(ranges) == 1:
        return int(work(ranges[0]))
    with ThreadPoolExecutor(max_workers=len(ranges)) as pool:
        return int(min(pool.map(work, ranges)))


def naive_min_distance(generator, p: int) -> int:
    """Reference: re-encode every nonzero message from scratch."""
    B = _basis(generator, p)
    k = B.shape[0]
    best = B.shape[1]
    msgs = np.array(list(itertools.product(range(p), repeat=k))[1:], dtype=np.int64)
    for chunk in range(0, len(msgs), 4096):
        words = msgs[chunk : chunk + 4096] @ B % p
        best = min(best, int(np.count_nonzero(words, axis=1).min()))
    return best


@dataclass(frozen=True)
class DistanceEstimate:
    """An upper bound on the minimum distance; not an exact value."""

    upper_bound: int
    samples: int
    method: str = "random information sets (upper bound)"

    def __str__(self):
        return f"d <= {self.upper_bound} ({self.method}, {self.samples} samples)"


def estimate_distance(generator, p: int, *, samples: int = 200, seed: int = 0) -> DistanceEstimate:
    """Upper bound from low-weight words found under random information sets.

    Each trial permutes the coordinates, brings the generator to systematic
    form and inspects every row and every sum of two rows.
    """
    B = _basis(generator, p)
    k, n = B.shape
    rng = np.random.default_rng(seed)
    best = int(np.count_nonzero(B, axis=1).min())
    for _ in range(samples):
        perm = rng.permutation(n)
        R = linalg.rref(B[:, perm], p).reduced[:k]
        best = min(best, int(np.count_nonzero(R, axis=1).min()))
        if k > 1:
            for c in range(1, p):
                sums = (R[:, None, :] + c * R[None, :, :]) % p
                w = np.count_nonzero(sums, axis=2)
                w[np.arange(k), np.arange(k)] = n + 1
                best = min(best, int(w.min()))
    return DistanceEstimate(best, samples)
