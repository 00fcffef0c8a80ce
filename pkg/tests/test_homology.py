import random

import pytest
from hypothesis import given, settings, strategies as st

from dunwoody.diagram import DunwoodyParams
from dunwoody.errors import DomainError
from dunwoody.homology import (
    AbelianGroupStructure,
    IntegerMatrix,
    abelian_group,
    first_homology,
    smith_normal_form,
)

from _oracles import invariant_factors_by_minors

matrices = st.integers(1, 5).flatmap(
    lambda m: st.integers(1, 5).flatmap(
        lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n),
                           min_size=m, max_size=m)))


@pytest.mark.parametrize("rows,expected", [
    ([[1, 0, 0], [0, 1, 0], [0, 0, 1]], [1, 1, 1]),
    ([[2, 0], [0, 3]], [1, 6]),
    ([[0]], [0]),
    ([[2, 4, 4], [-6, 6, 12], [10, -4, -16]], [2, 6, 12]),
    ([[0, 0, 0], [0, 0, 0]], [0, 0]),
    ([[6, 4]], [2]),
])
def test_known_forms(rows, expected):
    assert smith_normal_form(rows) == expected
    assert smith_normal_form(IntegerMatrix.from_rows(rows)) == expected


def test_empty_matrices():
    assert smith_normal_form(IntegerMatrix(0, 3, ())) == []
    assert abelian_group(IntegerMatrix(0, 3, ())) == AbelianGroupStructure(3)


def test_big_entries_stay_exact():
    big = 10 ** 40 + 7
    assert smith_normal_form([[big, 0], [0, big * 3]]) == [big, 3 * big]


def test_matrix_shape_checked():
    with pytest.raises(DomainError):
        IntegerMatrix(2, 2, (1, 2, 3))


@settings(max_examples=200, deadline=None)
@given(matrices)
def test_matches_minor_gcds(rows):
    assert smith_normal_form(rows) == invariant_factors_by_minors(rows)


@settings(max_examples=100, deadline=None)
@given(matrices, st.randoms(use_true_random=False))
def test_permutation_invariant(rows, rnd):
    inv = smith_normal_form(rows)
    rows2 = [list(r) for r in rows]
    rnd.shuffle(rows2)
    cols = list(range(len(rows[0])))
    rnd.shuffle(cols)
    rows2 = [[r[j] for j in cols] for r in rows2]
    assert smith_normal_form(rows2) == inv


@settings(max_examples=100, deadline=None)
@given(matrices)
def test_divisibility_chain(rows):
    inv = smith_normal_form(rows)
    assert all(x >= 0 for x in inv)
    for x, y in zip(inv, inv[1:]):
        assert (y % x == 0) if x else y == 0


def test_group_structure_validation():
    with pytest.raises(DomainError):
        AbelianGroupStructure(0, (1,))
    with pytest.raises(DomainError):
        AbelianGroupStructure(0, (4, 6))
    g = AbelianGroupStructure(1, (2, 4))
    assert str(g) == "Z + Z/2 + Z/4" and g.order == 0 and not g.is_cyclic
    assert str(AbelianGroupStructure(0)) == "0"
    assert AbelianGroupStructure(0, (5,)).order == 5


@pytest.mark.parametrize("params,expected", [
    ((1, 1, 1, 3, 2, 1), AbelianGroupStructure(3)),
    ((0, 0, 0, 4, 0, 3), AbelianGroupStructure(4)),
    ((0, 0, 5, 1, 2, 0), AbelianGroupStructure(0, (5,))),
    ((1, 1, 1, 1, 2, 0), AbelianGroupStructure(1)),
])
def test_first_homology(params, expected):
    assert first_homology(DunwoodyParams(*params)) == expected


def test_lens_like_for_single_pair():
    rnd = random.Random(7)
    for _ in range(60):
        a, b, c = (rnd.randint(0, 4) for _ in range(3))
        d = 2 * a + b + c
        p = DunwoodyParams(a, b, c, 1, rnd.randint(0, max(d - 1, 0)), 0)
        try:
            h = first_homology(p)
        except ValueError:
            continue
        assert h.free_rank <= 1 and len(h.torsion) <= 1 and h.is_cyclic
