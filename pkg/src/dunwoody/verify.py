"""End-to-end check: torus knot -> Dunwoody cover -> H_1, against Fox's formula."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterator, Tuple

from .covering import branched_cover_params
from .homology import first_homology
from .oracle import alexander_torus, fox_homology_order
from .torusknot import torus_knot_code


@dataclass(frozen=True)
class CoverCheck:
    k: int
    h: int
    n: int
    code: Tuple[int, int, int, int]
    params: Tuple[int, int, int, int, int, int]
    homology: dict
    order: int  # |H_1| from the diagram, 0 if infinite
    oracle: int  # Fox order, 0 if infinite

    @property
    def passed(self) -> bool:
        return self.order == self.oracle

    def to_dict(self):
        return {
            "k": self.k, "h": self.h, "n": self.n,
            "code": list(self.code), "params": list(self.params),
            "homology": self.homology, "order": self.order,
            "oracle": self.oracle, "pass": self.passed,
        }

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        return (f"t({self.k},{self.h}) n={self.n} M{self.params_str()} "
                f"H1={self.homology_str()} order={self.order} oracle={self.oracle} {status}")

    def params_str(self):
        return "(" + ",".join(map(str, self.params)) + ")"

    def homology_str(self):
        from .homology import AbelianGroupStructure

        return str(AbelianGroupStructure(self.homology["freeRank"], self.homology["torsion"]))


def check_torus_cover(k: int, h: int, n: int) -> CoverCheck:
    code, _ = torus_knot_code(k, h)
    params = branched_cover_params(code, n)
    hom = first_homology(params)
    return CoverCheck(
        k, h, n, code.as_tuple(), params.as_tuple(), hom.to_dict(),
        hom.order, fox_homology_order(alexander_torus(k, h), n),
    )


def torus_pairs(kmax: int, hmax: int) -> Iterator[Tuple[int, int]]:
    """Coprime pairs 1 < k < h <= hmax with k <= kmax, sorted."""
    for k in range(2, kmax + 1):
        for h in range(k + 1, hmax + 1):
            if gcd(k, h) == 1:
                yield k, h
