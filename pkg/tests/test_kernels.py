from itertools import product

import numpy as np
import pytest

from oracles import brute_orbits_on_pairs
from qpartition import _kernels
from qpartition.combinatorics import imaj, sequence_to_permutation
from qpartition.glnq import GLMatrix, act_group_element, basis, canonicalize, group_order, words_to_array

BACKENDS = ["numba", "numpy"]


def test_backend_selection():
    assert _kernels.DEFAULT_BACKEND in BACKENDS
    with pytest.raises(ValueError):
        _kernels.imaj_histogram(2, 2, backend="fortran")


@pytest.mark.parametrize("backend", BACKENDS)
@pytest.mark.parametrize("n,r", [(1, 3), (2, 4), (3, 3), (4, 2), (5, 3)])
def test_imaj_histogram(backend, n, r):
    hist = _kernels.imaj_histogram(n, r, backend=backend)
    brute = np.zeros_like(hist)
    for a in product(range(1, n + 1), repeat=r):
        brute[imaj(sequence_to_permutation(a, n))] += 1
    assert np.array_equal(hist, brute)


def random_perms(rng, m, dim):
    return np.array([rng.permutation(dim) for _ in range(m)], dtype=np.int64)


@pytest.mark.parametrize("seed", range(8))
def test_pair_orbits_backends_agree_with_bfs(seed):
    rng = np.random.default_rng(seed)
    dim = int(rng.integers(1, 12))
    perms = random_perms(rng, int(rng.integers(1, 3)), dim)
    expected = brute_orbits_on_pairs(perms.tolist(), dim)
    for backend in BACKENDS:
        assert _kernels.pair_orbit_count(perms, backend=backend) == expected


def test_pair_orbits_trivial_group():
    perms = np.arange(5, dtype=np.int64)[None, :]
    for backend in BACKENDS:
        assert _kernels.pair_orbit_count(perms, backend=backend) == 25


@pytest.mark.parametrize("seed", range(4))
def test_fixed_square_sum(seed):
    rng = np.random.default_rng(seed)
    perms = random_perms(rng, 10, 7)
    expected = sum(int((p == np.arange(7)).sum()) ** 2 for p in perms)
    for backend in BACKENDS:
        assert _kernels.fixed_square_sum(perms, backend=backend) == expected


@pytest.mark.parametrize("n,q", [(1, 3), (2, 2), (2, 3), (3, 2), (2, 5)])
def test_invertible_matrices(n, q):
    results = []
    for backend in BACKENDS:
        mats = _kernels.invertible_matrices(n, q, backend=backend, chunk=17)
        assert len(mats) == group_order(n, q)
        for m in mats[:: max(1, len(mats) // 25)]:
            GLMatrix(m.tolist(), q)  # raises if singular
        results.append({m.tobytes() for m in mats})
    assert results[0] == results[1]


@pytest.mark.parametrize("n,r,q", [(2, 2, 2), (3, 2, 2), (2, 3, 3), (3, 3, 2)])
def test_act_on_words_matches_scalar_path(n, r, q):
    words = basis(n, r, q)
    arr = words_to_array(words, n, r)
    rng = np.random.default_rng(n * r * q)
    mats = _kernels.invertible_matrices(n, q)
    mats = mats[rng.choice(len(mats), size=min(12, len(mats)), replace=False)]
    expected = np.stack([
        words_to_array([canonicalize(act_group_element(GLMatrix(m.tolist(), q), w)) for w in words], n, r)
        for m in mats
    ])
    for backend in BACKENDS:
        assert np.array_equal(_kernels.act_on_words(mats, arr, q, backend=backend), expected)


def test_word_keys():
    words = words_to_array(basis(3, 2, 2), 3, 2)
    keys = _kernels.word_keys(words, 3, 2)
    assert len(set(keys.tolist())) == len(words)
    with pytest.raises(OverflowError):
        _kernels.word_keys(np.zeros((1, 30, 10), dtype=np.int64), 10, 7)
