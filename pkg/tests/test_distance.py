from __future__ import annotations

import numpy as np
import pytest

from grcodes import distance, linalg
from grcodes.errors import ResourceCapError


def hamming_generator():
    return np.array([[1, 0, 0, 0, 0, 1, 1], [0, 1, 0, 0, 1, 0, 1], [0, 0, 1, 0, 1, 1, 0], [0, 0, 0, 1, 1, 1, 1]])


def test_hamming():
    G = hamming_generator()
    assert distance.min_distance(G, 2) == 3
    assert distance.naive_min_distance(G, 2) == 3


def test_dependent_rows_are_reduced():
    G = hamming_generator()
    G2 = np.concatenate([G, (G[:1] + G[1:2]) % 2, G[:1]])
    assert distance.min_distance(G2, 2) == 3


def test_zero_code_rejected():
    with pytest.raises(ValueError):
        distance.min_distance(np.zeros((2, 5), dtype=int), 2)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_gray_code_matches_naive(p):
    rng = np.random.default_rng(100 + p)
    checked = 0
    while checked < 40:
        k = int(rng.integers(1, 13 if p == 2 else 7))
        n = int(rng.integers(k, 150 if p == 2 else 30))
        G = rng.integers(0, p, (k, n))
        if linalg.rank(G, p) == 0:
            continue
        for threads in (1, 3):
            assert distance.min_distance(G, p, threads=threads) == distance.naive_min_distance(G, p)
        checked += 1


def test_result_independent_of_worker_count():
    rng = np.random.default_rng(7)
    G = rng.integers(0, 2, (18, 40))
    ref = distance.min_distance(G, 2, threads=1)
    for t in (2, 4, 7):
        assert distance.min_distance(G, 2, threads=t) == ref


def test_cap_and_env(monkeypatch):
    G = np.eye(10, dtype=int)
    with pytest.raises(ResourceCapError):
        distance.min_distance(G, 2, cap=9)
    assert distance.min_distance(G, 2, cap=10) == 1
    monkeypatch.setenv(distance.CAP_ENV, "4")
    with pytest.raises(ResourceCapError):
        distance.min_distance(G, 2)
    with pytest.raises(ResourceCapError):
        distance.min_distance(np.eye(3, dtype=int), 3)  # 3 log2 3 > 4 bits


def test_estimate_is_an_upper_bound():
    rng = np.random.default_rng(3)
    for _ in range(10):
        G = rng.integers(0, 2, (8, 24))
        if linalg.rank(G, 2) == 0:
            continue
        est = distance.estimate_distance(G, 2, samples=20, seed=1)
        assert est.upper_bound >= distance.min_distance(G, 2)
        assert "upper bound" in str(est)
