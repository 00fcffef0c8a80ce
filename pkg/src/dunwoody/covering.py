"""Orientation counts of knot codes and the shift s of their cyclic coverings.

For a code K(a, b, c, r) the single traced curve of D(a, b, c, 1, r, 0) is
oriented so that it leaves the vertex labelled 1 on C'.  Then

* p is the number of linking arcs (B- and C-arcs) run from C' to C'' minus
  those run from C'' to C', and
* q is the number of times the curve crosses a fixed ray from the branch
  point N (the centre of the ring picture) to infinity clockwise, minus the
  counterclockwise crossings.  An A-arc run from its ``A out`` end crosses
  the ray counterclockwise, a B-arc run from C' crosses it clockwise, and a
  C-arc does not cross it.

Lifting the curve to the n-fold picture moves one sheet per ray crossing and
s sheets per handle passage, so the n lifts close up exactly when
q + s p = 0 (mod n).
"""

from __future__ import annotations

from math import gcd
from typing import List, Optional, Tuple

from .diagram import INTERNAL, DunwoodyParams, build_diagram, next_step, trace_curves
from .errors import AdmissibilityError, AmbiguousShiftError, DomainError
from .torusknot import KnotCode


def _as_code(code) -> KnotCode:
    return code if isinstance(code, KnotCode) else KnotCode(*code)


def orientation_counts(code) -> Tuple[int, int]:
    """(p, q) for the oriented one-curve diagram of ``code``."""
    code = _as_code(code)
    if code.d == 0:
        raise DomainError(f"{code} has no arcs; p and q are undefined")
    diagram = build_diagram(code.params())
    count = trace_curves(diagram).count
    if count != 1:
        raise AdmissibilityError(f"{code} traces {count} curves, expected 1")

    start = (INTERNAL, 1, 1)
    first = diagram.arc_at(start)
    step = (first.id, 1 if first.ends[0] == start else -1)
    p = sheets = 0
    for _ in range(len(diagram.arcs)):
        arc_id, direction = step
        family = diagram.arcs[arc_id].family
        if family == "A":
            sheets += direction
        elif family == "B":
            sheets -= direction
            p += direction
        else:
            p += direction
        step = next_step(diagram, *step)
    return p, -sheets


def shift_solutions(p: int, q: int, n: int) -> List[int]:
    """All s in [0, n) with q + s p = 0 (mod n)."""
    g = gcd(p, n)
    if q % g:
        return []
    m = n // g
    s0 = (-(q // g) * pow(p // g, -1, m)) % m if m > 1 else 0
    return [s0 + j * m for j in range(g)]


def covering_shift(code, n: int) -> int:
    """The s of the n-fold strongly-cyclic covering M(a, b, c, n, r, s).

    For knots in S^3 (p = +-1) this is -pq mod n.  If the congruence has
    no solution or several, AmbiguousShiftError lists them all.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")
    code = _as_code(code)
    p, q = orientation_counts(code)
    candidates = shift_solutions(p, q, n)
    if len(candidates) != 1:
        raise AmbiguousShiftError(
            f"{code} with p={p}, q={q}: q + s*p = 0 (mod {n}) has solutions "
            f"{candidates}",
            candidates,
        )
    return candidates[0]


def branched_cover_params(code, n: int, s: Optional[int] = None) -> DunwoodyParams:
    """Dunwoody parameters of the n-fold strongly-cyclic branched covering.

    The trivial code K(0,0,0,0) has n coverings M(0,0,0,n,0,s); pass ``s``
    to pick one.  For other codes an explicit ``s`` must satisfy the
    covering congruence.
    """
    code = _as_code(code)
    if code.d == 0:
        if s is None:
            raise AmbiguousShiftError(
                f"{code} has {n} strongly-cyclic {n}-fold coverings; choose s",
                range(n),
            )
        return code.params(n, s)
    if s is None:
        s = covering_shift(code, n)
    else:
        p, q = orientation_counts(code)
        if (q + s * p) % n:
            raise DomainError(f"s={s} violates q + s*p = 0 (mod {n}) for {code}")
    return code.params(n, s)
