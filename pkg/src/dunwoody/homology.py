"""Exact integer linear algebra: Smith normal form and first homology."""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import List, Sequence, Tuple

from .errors import DomainError


@dataclass(frozen=True)
class IntegerMatrix:
    rows: int
    cols: int
    entries: Tuple[int, ...]  # row-major

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DomainError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise DomainError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} "
                f"entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int = None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise DomainError("ragged rows")
        return cls(len(rows), cols, tuple(int(x) for r in rows for x in r))

    def to_rows(self) -> List[List[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]


def smith_normal_form(matrix) -> List[int]:
    """Invariant factors d_1 | d_2 | ... | d_k, k = min(rows, cols).

    Zero invariants come last.  Accepts an IntegerMatrix or a list of rows.
    Pivots are chosen by smallest absolute value to keep entries small.
    """
    if isinstance(matrix, IntegerMatrix):
        m, n = matrix.rows, matrix.cols
        A = matrix.to_rows()
    else:
        A = [list(r) for r in matrix]
        m = len(A)
        n = len(A[0]) if A else 0
    k = min(m, n)
    diag = []
    for t in range(k):
        pivot = _smallest(A, t, m, n)
        if pivot is None:
            break
        while True:
            i, j = pivot
            A[t], A[i] = A[i], A[t]
            for row in A:
                row[t], row[j] = row[j], row[t]
            p = A[t][t]
            dirty = False
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // p
                    if q:
                        Ai, At = A[i], A[t]
                        for j in range(t, n):
                            Ai[j] -= q * At[j]
                    dirty = dirty or A[i][t] != 0
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // p
                    if q:
                        for i in range(t, m):
                            A[i][j] -= q * A[i][t]
                    dirty = dirty or A[t][j] != 0
            if dirty:
                pivot = _smallest_in_cross(A, t, m, n)
                continue
            # row and column cleared; enforce p | rest of the block
            bad = next(
                (i for i in range(t + 1, m)
                 if any(A[i][j] % p for j in range(t + 1, n))),
                None,
            )
            if bad is None:
                break
            At, Ab = A[t], A[bad]
            for j in range(t, n):
                At[j] += Ab[j]
            pivot = (t, t)
        diag.append(abs(A[t][t]))
    diag.extend([0] * (k - len(diag)))
    return diag


def _smallest(A, t, m, n):
    best = None
    for i in range(t, m):
        for j in range(t, n):
            x = abs(A[i][j])
            if x and (best is None or x < best[0]):
                best = (x, i, j)
                if x == 1:
                    return i, j
    return None if best is None else best[1:]


def _smallest_in_cross(A, t, m, n):
    cells = [(abs(A[i][t]), i, t) for i in range(t, m) if A[i][t]]
    cells += [(abs(A[t][j]), t, j) for j in range(t + 1, n) if A[t][j]]
    _, i, j = min(cells)
    return i, j


@dataclass(frozen=True)
class AbelianGroupStructure:
    """Z^free_rank + Z/t_1 + ... + Z/t_k with t_1 | t_2 | ... and every t_i >= 2."""

    free_rank: int
    torsion: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(self.torsion))
        if self.free_rank < 0:
            raise DomainError("free rank must be nonnegative")
        if any(t < 2 for t in self.torsion):
            raise DomainError(f"torsion factors must be >= 2: {self.torsion}")
        for x, y in zip(self.torsion, self.torsion[1:]):
            if y % x:
                raise DomainError(f"torsion factors must form a divisibility chain: {self.torsion}")

    @classmethod
    def from_invariants(cls, invariants: Sequence[int], generators: int):
        nonzero = [x for x in invariants if x]
        return cls(generators - len(nonzero), tuple(x for x in nonzero if x > 1))

    @property
    def order(self) -> int:
        """|H|, with 0 standing for an infinite group."""
        return 0 if self.free_rank else prod(self.torsion)

    @property
    def is_cyclic(self) -> bool:
        return self.free_rank + len(self.torsion) <= 1

    def to_dict(self):
        return {"freeRank": self.free_rank, "torsion": list(self.torsion)}

    def __str__(self):
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"


def abelian_group(matrix: IntegerMatrix) -> AbelianGroupStructure:
    """Cokernel of the relation matrix (rows are relations, columns generators)."""
    return AbelianGroupStructure.from_invariants(smith_normal_form(matrix), matrix.cols)


def first_homology(params) -> AbelianGroupStructure:
    """H_1 of the Dunwoody manifold M(a, b, c, n, r, s)."""
    from .presentation import abelianization, presentation_of

    return abelian_group(abelianization(presentation_of(params)))
