from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qpartition.combinatorics import bell, set_partitions
from qpartition.errors import GuardError
from qpartition.qpoly import d_poly, falling_q_product
from qpartition.qset_partitions import (
    QSetPartition,
    count_qsp_symbolic,
    enumerate_qsp,
    from_set_partition,
    is_restricted,
    per_shape_counts,
    render_ascii,
    star_height,
    tilde,
    to_set_partition,
)

heights = st.lists(st.integers(0, 6), max_size=9)


def test_star_height_examples():
    assert star_height((1, 4, 2, 0, 2, 5, 2)) == (0, 1, 2, 0, 2, 3, 2)
    assert star_height((0, 0, 0)) == (0, 0, 0)
    assert star_height((3, 3)) == (0, 1)


@settings(max_examples=300, deadline=None)
@given(heights)
def test_star_height_properties(k):
    ks = star_height(k)
    assert star_height(ks) == ks
    assert is_restricted(ks)
    assert is_restricted(k) == (star_height(k) == tuple(k))
    assert all(s <= x for s, x in zip(ks, k))


def test_is_restricted_examples():
    assert is_restricted((0, 1, 2, 0, 2, 3, 2))
    assert not is_restricted((1, 0))
    assert not is_restricted((0, 2))


def test_to_set_partition():
    K = to_set_partition((0, 1, 2, 0, 2, 3, 2))
    assert K.blocks == ((1, 4), (2,), (3, 5, 7), (6,))
    assert len(to_set_partition((0, 0, 0, 0))) == 1
    with pytest.raises(ValueError):
        to_set_partition((0, 2))


@pytest.mark.parametrize("n,r", [(n, r) for n in range(1, 5) for r in range(0, 6)])
def test_set_partition_bijection(n, r):
    restricted = [k for k in product(range(n), repeat=r) if is_restricted(k)]
    images = {to_set_partition(k) for k in restricted}
    target = {K for K in set_partitions(r) if len(K) <= n}
    assert images == target and len(images) == len(restricted)
    assert all(from_set_partition(to_set_partition(k)) == k for k in restricted)


@pytest.mark.parametrize("r", range(0, 6))
def test_distinct_star_heights_count_bell(r):
    n = max(r, 1)
    assert len({star_height(k) for k in product(range(n), repeat=r)}) == bell(r)


def test_enumerate_examples():
    assert len(enumerate_qsp(3, 2, 1)) == 9
    assert [K.to_json() for K in enumerate_qsp(3, 0, 2)] == [{"heights": [], "entries": [], "n": 3, "q": 2}]
    assert len(enumerate_qsp(2, 2, 2)) == 6
    with pytest.raises(GuardError):
        enumerate_qsp(5, 5, 5)


@pytest.mark.parametrize("n,r,q", [(n, r, q) for n in range(1, 4) for r in range(0, 4) for q in (1, 2, 3)])
def test_enumeration_counts(n, r, q):
    elements = enumerate_qsp(n, r, q)
    assert len(elements) == len(set(elements)) == d_poly(n, r)(q) == count_qsp_symbolic(n, r)(q)


@pytest.mark.parametrize("n,r,q", [(n, r, q) for n in range(1, 4) for r in range(1, 4) for q in (2, 3)])
def test_per_shape_count(n, r, q):
    counts = per_shape_counts(n, r, q)
    for ks, c in counts.items():
        assert c == falling_q_product(n, len(set(ks)))(q)


@pytest.mark.parametrize("n", range(1, 7))
def test_symbolic_count_is_d_poly(n):
    assert count_qsp_symbolic(n, 0) == 1
    assert count_qsp_symbolic(n, 1) == d_poly(n, 1)
    for r in range(6):
        assert count_qsp_symbolic(n, r) == d_poly(n, r)


def test_validation_and_json():
    with pytest.raises(ValueError):
        QSetPartition((0, 1), ((), (1,)), 3, 2)  # second column has no free slot
    with pytest.raises(ValueError):
        QSetPartition((2,), ((1, 5),), 3, 2)
    K = QSetPartition((1, 2), ((1,), (0,)), 3, 2)
    assert QSetPartition.from_json(K.to_json()) == K


def test_tilde_worked_example():
    # entries encoded as column*10 + position so moves are traceable
    K =QSetPartition((2, 4, 0, 3, 2, 6, 3), ((11, 12), (21, 22, 23), (), (31,), (), (41, 42, 43), ()), 8, 50)
    record = []
    T = tilde(K, record)
    assert T.heights == (0, 2, 4, 0, 3, 2, 6, 3)
    assert T.stars == (0, 1, 2, 0, 3, 2, 4, 3)
    assert T.entries == ((), (12,), (22, 23), (), (), (), (42, 43), ())
    assert record == [(2, 11), (3, 21), (5, 31), (7, 41)]


def test_tilde_small_cases():
    K = QSetPartition((0, 0), ((), ()), 3, 2)
    assert tilde(K) == QSetPartition((0, 0, 0), ((), (), ()), 3, 2)
    K = QSetPartition((1,), ((1,),), 3, 2)
    assert tilde(K) == QSetPartition((0, 1), ((), ()), 3, 2)


@pytest.mark.parametrize("n,r,q", [(2, 2, 2), (3, 2, 2), (3, 3, 2), (4, 2, 2), (3, 2, 3)])
def test_tilde_lands_in_half_level(n, r, q):
    images = set()
    for K in enumerate_qsp(n, r, q):
        T = tilde(K)
        assert T.heights[0] == 0 and T.r == r + 1
        images.add(T)
    half = [K for K in enumerate_qsp(n, r + 1, q) if K.heights[0] == 0]
    assert images == set(half)


def test_render_ascii():
    K = QSetPartition((0, 2, 1), ((), (1,), ()), 3, 2)
    assert render_ascii(K) == "| |1| |\n| |*|*|\n+-+-+-+"
