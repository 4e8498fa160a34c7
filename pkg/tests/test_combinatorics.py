from itertools import permutations, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qpartition.combinatorics import (
    Partition,
    Permutation,
    SetPartition,
    StandardTableau,
    backsteps,
    bell,
    coset_reps,
    descent_set_permutation,
    descent_set_tableau,
    enumerate_partitions,
    imaj,
    inv,
    maj_tableau,
    sequence_to_permutation,
    sequence_to_permutation_iterative,
    set_partitions,
    shape_of_sequence,
    standard_tableaux,
    stirling2,
)
from qpartition.qpoly import QPolynomial, q_factorial


def brute_partitions(n):
    # every weakly decreasing tuple of positive ints summing to n
    out = set()
    for length in range(n + 1):
        for parts in product(range(1, n + 1), repeat=length):
            if sum(parts) == n and all(parts[i] >= parts[i + 1] for i in range(length - 1)):
                out.add(parts)
    return out


def test_enumerate_partitions_small():
    assert enumerate_partitions(0) == [()]
    assert enumerate_partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert len(enumerate_partitions(6)) == 11


@pytest.mark.parametrize("n", range(8))
def test_enumerate_partitions_matches_brute_force(n):
    got = enumerate_partitions(n)
    assert set(got) == brute_partitions(n)
    assert len(got) == len(set(got))
    assert got == sorted(got, reverse=True)


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition([1, 2])
    with pytest.raises(ValueError):
        Partition([2, 0])
    assert Partition([]).n == 0


def test_descent_set_tableau():
    T = StandardTableau([[1, 2, 5, 6], [3, 7, 9, 10], [4, 8]])
    assert descent_set_tableau(T) == [2, 3, 6, 7]
    assert maj_tableau(T) == 18
    assert descent_set_tableau(StandardTableau.single_row(5)) == []
    assert descent_set_tableau(StandardTableau([[1], [2], [3]])) == [1, 2]
    assert maj_tableau(StandardTableau([[1, 3], [2, 4]])) == 4


def test_tableau_validation():
    with pytest.raises(ValueError):
        StandardTableau([[2, 1]])
    with pytest.raises(ValueError):
        StandardTableau([[1, 2], [1]])
    with pytest.raises(ValueError):
        StandardTableau([[1, 3], [2, 2]])
    assert not StandardTableau([[1, 4]]).is_standard()


def test_backsteps_and_imaj():
    w = (5, 2, 1, 6, 3, 4)
    assert backsteps(w) == [1, 4]
    assert imaj(w) == 5
    assert inv(w) == 7
    assert backsteps((1, 2, 3)) == [] and imaj((1, 2, 3)) == 0
    assert backsteps((2, 1)) == [1] and imaj((2, 1)) == 1
    assert inv(tuple(range(6, 0, -1))) == 15


@pytest.mark.parametrize("n", range(1, 7))
def test_backsteps_are_descents_of_inverse(n):
    for w in permutations(range(1, n + 1)):
        assert backsteps(w) == descent_set_permutation(Permutation(w).inverse())


def test_sequence_to_permutation_examples():
    assert sequence_to_permutation((2, 1, 3, 1, 6, 4, 6, 3, 4), 6) == (5, 2, 1, 6, 3, 4)
    assert sequence_to_permutation((2, 1, 3, 1, 6, 2, 6, 1, 3, 1), 6) == (4, 5, 2, 6, 3, 1)
    assert sequence_to_permutation((), 4) == Permutation.identity(4)
    with pytest.raises(ValueError):
        sequence_to_permutation((0, 1), 3)
    with pytest.raises(ValueError):
        sequence_to_permutation((4,), 3)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 7).flatmap(lambda n: st.tuples(st.just(n), st.lists(st.integers(1, n), max_size=12))))
def test_rightmost_scan_equals_cycling(args):
    n, a = args
    assert sequence_to_permutation(a, n) == sequence_to_permutation_iterative(a, n)


def test_shape_of_sequence():
    K = shape_of_sequence((2, 1, 3, 1, 6, 2, 6, 1, 3, 1))
    assert K == SetPartition([[1, 6], [2, 4, 8, 10], [3, 9], [5, 7]])
    assert shape_of_sequence((4, 4, 4)) == SetPartition([[1, 2, 3]])
    assert len(shape_of_sequence((1, 2, 3, 4))) == 4


def test_coset_reps():
    assert coset_reps(4, 4) == [(1, 2, 3, 4)]
    assert sorted(coset_reps(2, 0)) == [(1, 2), (2, 1)]
    assert coset_reps(3, 2) == [(1, 2, 3), (1, 3, 2), (2, 3, 1)]
    with pytest.raises(ValueError):
        coset_reps(3, 4)
    for n in range(1, 6):
        for t in range(n + 1):
            assert len(coset_reps(n, t)) * q_factorial(t)(1) == q_factorial(n)(1)


def _dist(ws, stat):
    out = {}
    for w in ws:
        out[stat(w)] = out.get(stat(w), 0) + 1
    return QPolynomial(out.get(i, 0) for i in range(max(out) + 1))


@pytest.mark.parametrize("n", range(1, 7))
def test_foata_schutzenberger_on_cosets(n):
    for t in range(n + 1):
        reps = coset_reps(n, t)
        target = q_factorial(n).exact_div(q_factorial(t))
        assert _dist(reps, inv) == _dist(reps, imaj) == target


def test_macmahon():
    for n in range(1, 8):
        assert _dist(permutations(range(1, n + 1)), inv) == q_factorial(n)


@pytest.mark.parametrize("n", range(1, 6))
def test_blocks_force_coset(n):
    for r in range(0, 4):
        for a in product(range(1, n + 1), repeat=r):
            ell = len(set(a))
            assert sequence_to_permutation(a, n) in set(coset_reps(n, n - ell))


@pytest.mark.parametrize("n,r", [(n, r) for n in range(1, 5) for r in range(1, 5)])
def test_reconstruction_from_shape_and_permutation(n, r):
    counts = {}
    for a in product(range(1, n + 1), repeat=r):
        key = (shape_of_sequence(a), sequence_to_permutation(a, n))
        counts[key] = counts.get(key, 0) + 1
    assert set(counts.values()) == {1}
    expected = sum(len(coset_reps(n, n - len(K))) for K in set_partitions(r) if len(K) <= n)
    assert len(counts) == expected == n**r


def test_stirling_and_bell():
    assert stirling2(4, 2) == 7
    assert stirling2(3, 2) == 3
    assert all(stirling2(r, 1) == 1 for r in range(1, 10))
    assert bell(0) == 1 and bell(4) == 15 and bell(6) == 203
    for r in range(0, 9):
        by_size = {}
        for K in set_partitions(r):
            by_size[len(K)] = by_size.get(len(K), 0) + 1
        for ell in range(r + 1):
            assert stirling2(r, ell) == by_size.get(ell, 0)


def test_standard_tableaux_counts():
    assert len(standard_tableaux((3, 2, 1))) == 16
    assert len(standard_tableaux((4, 4))) == 14
    assert all(T.is_standard() for T in standard_tableaux((3, 2)))
