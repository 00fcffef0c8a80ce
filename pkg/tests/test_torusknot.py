from math import gcd

import pytest

from dunwoody.errors import DomainError
from dunwoody.torusknot import (
    KnotCode,
    epsilon_sequence,
    torus_family_code,
    torus_knot_code,
    torus_knot_trace,
)


def _eps_by_multiples(k, h):
    """eps_{h-j} is -1 exactly when some multiple of h lies in ((j+1)k, (j+2)k]."""
    out = [0] * h
    for j in range(h):
        hit = any((j + 1) * k < m * h <= (j + 2) * k for m in range(1, k + 2))
        out[h - j - 1] = -1 if hit else 0
    return tuple(out)


def coprime_pairs(hmax):
    return [(k, h) for h in range(3, hmax + 1) for k in range(2, h) if gcd(k, h) == 1]


def test_epsilon_examples():
    assert epsilon_sequence(5, 8).values == (0, -1, -1, 0, -1, -1, 0, -1)
    assert epsilon_sequence(2, 3).values == (0, -1, -1)


def test_epsilon_matches_multiple_counting():
    for k, h in coprime_pairs(30):
        assert epsilon_sequence(k, h).values == _eps_by_multiples(k, h)


def test_epsilon_sum_and_range():
    for k, h in coprime_pairs(60):
        eps = epsilon_sequence(k, h)
        assert len(eps) == h
        assert set(eps) <= {-1, 0}
        assert sum(eps) == -k


@pytest.mark.parametrize("k,h", [(1, 3), (3, 3), (4, 3), (2, 4), (6, 9), (0, 5)])
def test_domain(k, h):
    with pytest.raises(DomainError):
        epsilon_sequence(k, h)
    with pytest.raises(DomainError):
        torus_knot_code(k, h)


def test_t58():
    code, z = torus_knot_code(5, 8)
    assert code == KnotCode(2, 1, 14, 11)
    assert str(code) == "K(2,1,14,11)"
    assert z == 0


def test_trefoil_hand_trace():
    # i, eps, d, w, v, u, a, b, c, r, z
    expected = [
        (1, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0),
        (2, -1, 1, 1, 0, -2, 0, 0, 1, 1, -1),
        (3, -1, 1, 1, 1, -1, 1, 0, 1, 2, 0),
    ]
    got = [tuple(s.to_dict().values()) for s in torus_knot_trace(2, 3)]
    assert got == expected
    assert torus_knot_code(2, 3) == (KnotCode(1, 0, 1, 2), 0)


@pytest.mark.parametrize("k", range(2, 11))
@pytest.mark.parametrize("c", range(1, 6))
def test_family_closed_form(k, c):
    expected = KnotCode(1, k - 2, 2 * k * c - 2 * c - k + 1, k)
    assert torus_family_code(k, c) == expected
    assert torus_knot_code(k, c * k + 1)[0] == expected


@pytest.mark.parametrize("k,c,expected", [
    (2, 1, (1, 0, 1, 2)),
    (3, 1, (1, 1, 2, 3)),
    (5, 2, (1, 3, 12, 5)),
])
def test_family_values(k, c, expected):
    assert torus_family_code(k, c).as_tuple() == expected


@pytest.mark.parametrize("k,c", [(1, 1), (2, 0), (0, 3)])
def test_family_domain(k, c):
    with pytest.raises(DomainError):
        torus_family_code(k, c)


def test_state_invariants():
    for k, h in coprime_pairs(40):
        steps = torus_knot_trace(k, h)
        for s in steps:
            assert s.b + s.c == s.d
            assert min(s.a, s.b, s.c) >= 0
        last = steps[-1]
        code, z = torus_knot_code(k, h)
        assert code.d > 0 and 0 <= code.r < code.d
        assert last.r == code.r  # the raw value is already reduced
        assert z == last.z


def test_knot_code_normalizes_r():
    assert KnotCode(1, 0, 1, 5).r == 2
    assert KnotCode(0, 0, 0, 3).r == 0
    with pytest.raises(DomainError):
        KnotCode(-1, 0, 1, 0)
