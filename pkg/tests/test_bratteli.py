import json
from fractions import Fraction
from pathlib import Path

import pytest

from qpartition.bratteli import (
    BratteliDiagram,
    dot_export,
    enumerate_vacillating,
    level_set,
    multiplicity,
    stabilization_table,
)
from qpartition.combinatorics import bell
from qpartition.verify import B6_REFERENCE

GOLDEN = Path(__file__).parent / "golden"


def test_level_sets():
    assert level_set(6, 3) == [(6,), (5, 1), (4, 2), (4, 1, 1), (3, 3), (3, 2, 1), (3, 1, 1, 1)]
    assert level_set(4, 0) == [(4,)]
    assert level_set(6, Fraction(3, 2)) == [(5,), (4, 1)]
    assert level_set(6, "3/2") == [(5,), (4, 1)]
    with pytest.raises(ValueError):
        level_set(6, Fraction(1, 3))


@pytest.mark.parametrize("level", sorted(B6_REFERENCE))
def test_reference_diagram_n6(level):
    got = [(tuple(lam), multiplicity(6, level, lam)) for lam in level_set(6, level)]
    assert got == B6_REFERENCE[level]


def test_multiplicity_examples():
    assert multiplicity(6, 3, (5, 1)) == 10
    assert multiplicity(6, 3, (3, 2, 1)) == 2
    assert multiplicity(5, 0, (5,)) == 1
    with pytest.raises(ValueError):
        multiplicity(6, 1, (4, 2))


def test_enumerate_vacillating_examples():
    assert len(enumerate_vacillating(6, 3, (3, 3))) == 1
    assert [tuple(Q) for Q in enumerate_vacillating(4, 0, (4,))] == [((4,),)]
    # the reference diagram labels (4,2) at level 2 with 1 and (5,1) with 3
    assert len(enumerate_vacillating(6, 2, (4, 2))) == 1
    assert len(enumerate_vacillating(6, 2, (5, 1))) == 3


@pytest.mark.parametrize("n,r", [(n, r) for n in range(1, 6) for r in range(0, 4)])
def test_paths_match_multiplicity(n, r):
    for lam in level_set(n, r):
        paths = enumerate_vacillating(n, r, lam)
        assert len(paths) == multiplicity(n, r, lam)
        assert len(set(paths)) == len(paths)
        assert all(Q.shape == lam for Q in paths)


@pytest.mark.parametrize("n,r", [(2, 1), (4, 2), (6, 3), (7, 3)])
def test_square_sum_is_bell(n, r):
    assert sum(multiplicity(n, r, lam) ** 2 for lam in level_set(n, r)) == bell(2 * r)


def test_edges_are_single_boxes():
    d = BratteliDiagram.build(5, 3)
    for (lv, lam), ups in d.edges.items():
        for mu in ups:
            big, small = (mu, lam) if lv.denominator == 2 else (lam, mu)
            assert sum(big) == sum(small) + 1
            assert all(b >= s for b, s in zip(big, tuple(small) + (0,) * len(big)))


def test_stabilization_for_large_n():
    # with n >= 2r the counts depend only on the part below the first row
    for r in (1, 2, 3):
        table = stabilization_table(r, range(2 * r, 2 * r + 3))
        for tail, by_n in table.items():
            assert len(set(by_n.values())) == 1, (r, tail, by_n)


def test_no_stabilization_when_r_large():
    table = stabilization_table(4, [2, 3])
    assert table[()] == {2: 8, 3: 14}


def test_dot_small_cases():
    d = BratteliDiagram.build(2, 0)
    assert d.num_vertices() == 1 and d.num_edges() == 0
    d = BratteliDiagram.build(3, 1)
    assert d.num_vertices() == 4 and d.num_edges() == 3
    text = dot_export(d)
    assert text.count("rank=same") == 3
    assert '"(2,1) | 1"' in text


def test_dot_golden_n6():
    text = dot_export(BratteliDiagram.build(6, 3))
    assert text == (GOLDEN / "bratteli_6_3.dot").read_text()
    assert text.count("rank=same") == 7
    assert '"(5,1) | 10"' in text


def test_json_dump():
    data = BratteliDiagram.build(6, 3).to_json()
    json.dumps(data)
    last = data["levels"][-1]
    assert last["level"] == "3"
    assert [v["multiplicity"] for v in last["vertices"]] == [5, 10, 6, 6, 1, 2, 1]
