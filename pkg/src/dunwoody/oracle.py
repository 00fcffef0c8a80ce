"""Alexander polynomials of torus knots and Fox's branched-cover formula.

Everything is exact integer arithmetic.  The resultant is computed with the
subresultant PRS; ``sylvester_resultant`` is a slower determinant route kept
as an independent check.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence, Tuple

from .errors import DomainError


@dataclass(frozen=True)
class IntPoly:
    """Integer polynomial; ``coeffs[i]`` is the coefficient of t^i."""

    coeffs: Tuple[int, ...] = ()

    def __post_init__(self):
        c = [int(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def monomial(cls, degree, coeff=1):
        return cls((0,) * degree + (coeff,))

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPoly(tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)))

    def __neg__(self):
        return IntPoly(tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(tuple(other * x for x in self.coeffs))
        if not self or not other:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return IntPoly(tuple(out))

    __rmul__ = __mul__

    def __divmod__(self, other):
        """Division over Z; every quotient coefficient must be an integer."""
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return IntPoly(), self
        quo = [0] * (dq + 1)
        lc = other.lc
        for k in range(dq, -1, -1):
            top = rem[k + other.degree]
            if top % lc:
                raise ArithmeticError("quotient is not an integer polynomial")
            q = top // lc
            quo[k] = q
            if q:
                for j, y in enumerate(other.coeffs):
                    rem[k + j] -= q * y
        return IntPoly(tuple(quo)), IntPoly(tuple(rem))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def content(self) -> int:
        g = 0
        for x in self.coeffs:
            g = gcd(g, x)
        return g

    def __str__(self):
        if not self:
            return "0"
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            body = mono if mag == 1 and i else f"{mag}{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _pseudo_remainder(a: IntPoly, b: IntPoly) -> IntPoly:
    """R with lc(b)^(deg a - deg b + 1) a = b Q + R."""
    rem = list(a.coeffs)
    db = b.degree
    lc = b.lc
    for k in range(a.degree - db, -1, -1):
        top = rem[k + db]
        rem = [lc * x for x in rem]
        if top:
            for j, y in enumerate(b.coeffs):
                rem[k + j] -= top * y
        rem.pop()
    return IntPoly(tuple(rem))


def resultant(f: IntPoly, g: IntPoly) -> int:
    """Res(f, g) by the subresultant polynomial remainder sequence."""
    if not f or not g:
        return 0
    A, B = f, g
    ca, cb = A.content(), B.content()
    A = IntPoly(tuple(x // ca for x in A.coeffs))
    B = IntPoly(tuple(x // cb for x in B.coeffs))
    t = ca ** B.degree * cb ** A.degree
    s = 1
    if A.degree < B.degree:
        A, B = B, A
        if A.degree % 2 and B.degree % 2:
            s = -1
    gg = h = 1
    while B.degree > 0:
        delta = A.degree - B.degree
        if A.degree % 2 and B.degree % 2:
            s = -s
        R = _pseudo_remainder(A, B)
        if not R:
            return 0
        den = gg * h ** delta
        A, B = B, IntPoly(tuple(x // den for x in R.coeffs))
        gg = A.lc
        h = gg ** delta // h ** (delta - 1) if delta else h
    # B is a nonzero constant here
    h = B.lc ** A.degree // h ** (A.degree - 1) if A.degree else 1
    return s * t * h


def _bareiss_det(M):
    M = [list(r) for r in M]
    n = len(M)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k]), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def sylvester_resultant(f: IntPoly, g: IntPoly) -> int:
    """Res(f, g) as the determinant of the Sylvester matrix."""
    if not f or not g:
        return 0
    m, n = f.degree, g.degree
    if m == 0 and n == 0:
        return 1
    size = m + n
    rows = []
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    for i in range(n):
        rows.append([0] * i + fc + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + gc + [0] * (size - n - 1 - i))
    return _bareiss_det(rows)


def alexander_torus(k: int, h: int) -> IntPoly:
    """(t^kh - 1)(t - 1) / ((t^k - 1)(t^h - 1)) for coprime 1 < k < h."""
    for name, v in (("k", k), ("h", h)):
        if isinstance(v, bool) or not isinstance(v, int):
            raise DomainError(f"{name} must be an integer, got {v!r}")
    if not 1 < k < h or gcd(k, h) != 1:
        raise DomainError(f"need coprime 1 < k < h, got k={k}, h={h}")
    one = IntPoly((1,))
    num = (IntPoly.monomial(k * h) - one) * (IntPoly.monomial(1) - one)
    den = (IntPoly.monomial(k) - one) * (IntPoly.monomial(h) - one)
    q, r = divmod(num, den)
    assert not r
    return q


def fox_homology_order(delta, n: int) -> int:
    """|H_1| of the n-fold cyclic branched cover, 0 meaning infinite.

    Computed as |Res(delta, 1 + t + ... + t^(n-1))|.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")
    if not isinstance(delta, IntPoly):
        delta = IntPoly(tuple(delta))
    if n == 1:
        return 1
    return abs(resultant(delta, IntPoly((1,) * n)))
