"""Dunwoody 4-tuples K(a, b, c, r) of torus knots t(k, h)."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import List, Tuple

from .diagram import DunwoodyParams, _check_int
from .errors import DomainError, RecurrenceError


@dataclass(frozen=True)
class KnotCode:
    """The (1,1)-knot of the one-circle-pair diagram D(a, b, c, 1, r, 0)."""

    a: int
    b: int
    c: int
    r: int = 0

    def __post_init__(self):
        # validation and r reduction are shared with the six-parameter form
        p = DunwoodyParams(self.a, self.b, self.c, 1, self.r, 0)
        object.__setattr__(self, "r", p.r)

    @property
    def d(self) -> int:
        return 2 * self.a + self.b + self.c

    def params(self, n: int = 1, s: int = 0) -> DunwoodyParams:
        return DunwoodyParams(self.a, self.b, self.c, n, self.r, s)

    def as_tuple(self):
        return (self.a, self.b, self.c, self.r)

    def __str__(self):
        return "K({},{},{},{})".format(*self.as_tuple())


@dataclass(frozen=True)
class EpsilonSequence:
    k: int
    h: int
    values: Tuple[int, ...]  # (eps_1, ..., eps_h)

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)


@dataclass(frozen=True)
class RecurrenceStep:
    i: int
    eps: int
    d: int  # 2a + b + c of the previous state
    w: int
    v: int
    u: int
    a: int
    b: int
    c: int
    r: int
    z: int

    def to_dict(self):
        return dict(self.__dict__)


def _check_torus(k, h):
    _check_int("k", k)
    _check_int("h", h)
    if not 1 < k < h:
        raise DomainError(f"need 1 < k < h, got k={k}, h={h}")
    if gcd(k, h) != 1:
        raise DomainError(f"k and h must be coprime, got gcd({k}, {h}) = {gcd(k, h)}")


def epsilon_sequence(k: int, h: int) -> EpsilonSequence:
    """eps_{h-j} = floor((j+1)k/h) - floor((j+2)k/h) for j = 0..h-1."""
    _check_torus(k, h)
    values = [0] * h
    for j in range(h):
        values[h - j - 1] = (j + 1) * k // h - (j + 2) * k // h
    return EpsilonSequence(k, h, tuple(values))


def torus_knot_trace(k: int, h: int) -> List[RecurrenceStep]:
    """Run the parametrization recurrence from (0, 0, 1, 0), z = 0.

    Each step is recorded with its auxiliary values w, v, u.  Raises
    RecurrenceError if an arc count ever goes negative.
    """
    eps = epsilon_sequence(k, h).values
    a, b, c, r, z = 0, 0, 1, 0, 0
    steps = []
    for i, e in enumerate(eps, start=1):
        d = 2 * a + b + c
        threshold = -1 - e
        if z < threshold:
            w = a + b + c
            v = -(b + c) * (z + 1 + e) - b
        elif z == threshold:
            w = a + c
            v = 0
        else:
            w = a
            v = (b + c) * (z + 1 + e) - c
        u = (r - 2 * w) // d  # floor, r - 2w may be negative
        a, b, r, z = a + v, r - 2 * w - u * d, a + v + w, u - e
        c = d - b
        if a < 0 or b < 0 or c < 0:
            raise RecurrenceError(
                f"t({k},{h}) step {i}: negative state a={a}, b={b}, c={c}"
            )
        steps.append(RecurrenceStep(i, e, d, w, v, u, a, b, c, r, z))
    return steps


def torus_knot_code(k: int, h: int) -> Tuple[KnotCode, int]:
    """(K(a, b, c, r), final z) for the torus knot t(k, h), 1 < k < h coprime."""
    last = torus_knot_trace(k, h)[-1]
    return KnotCode(last.a, last.b, last.c, last.r), last.z


def torus_family_code(k: int, c: int) -> KnotCode:
    """Closed form for t(k, ck + 1): K(1, k - 2, 2kc - 2c - k + 1, k)."""
    _check_int("k", k)
    _check_int("c", c)
    if k <= 1 or c <= 0:
        raise DomainError(f"need k > 1 and c > 0, got k={k}, c={c}")
    return KnotCode(1, k - 2, 2 * k * c - 2 * c - k + 1, k)
