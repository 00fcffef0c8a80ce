"""Group presentations read off admissible Dunwoody diagrams."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence, Tuple

from .diagram import Diagram, build_diagram, is_admissible
from .errors import AdmissibilityError, DomainError
from .homology import IntegerMatrix

Letter = Tuple[int, int]  # (generator index in 1..n, exponent +1/-1)
Word = Tuple[Letter, ...]


@dataclass(frozen=True)
class GroupPresentation:
    generator_count: int
    relators: Tuple[Word, ...]

    def __post_init__(self):
        rels = tuple(tuple((int(g), int(e)) for g, e in w) for w in self.relators)
        object.__setattr__(self, "relators", rels)
        if self.generator_count < 0:
            raise DomainError("generator count must be nonnegative")
        for w in rels:
            for g, e in w:
                if not 1 <= g <= self.generator_count or e not in (1, -1):
                    raise DomainError(f"bad letter {(g, e)} for {self.generator_count} generators")

    @property
    def empty_relators(self) -> int:
        """Number of relators that are the empty word (trivial diagrams)."""
        return sum(1 for w in self.relators if not w)

    @property
    def letter_count(self) -> int:
        return sum(len(w) for w in self.relators)

    def to_dict(self):
        return {
            "generators": self.generator_count,
            "relators": [[g * e for g, e in w] for w in self.relators],
        }

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    def __str__(self):
        gens = ", ".join(f"x{i}" for i in range(1, self.generator_count + 1))
        rels = ", ".join(format_word(w) for w in self.relators)
        return f"< {gens} | {rels} >"

    @classmethod
    def from_signed(cls, generator_count: int, relators: Sequence[Sequence[int]]):
        """Build from signed-index words, e.g. ``[[1, -2], [2, -1]]``."""
        return cls(generator_count, tuple(
            tuple((abs(x), 1 if x > 0 else -1) for x in w) for w in relators
        ))


def format_word(word: Word) -> str:
    """``x1^2 x3^-1`` style; the empty word prints as ``1``."""
    if not word:
        return "1"
    out = []
    i = 0
    while i < len(word):
        g, e = word[i]
        j = i
        while j < len(word) and word[j] == (g, e):
            j += 1
        power = (j - i) * e
        out.append(f"x{g}" if power == 1 else f"x{g}^{power}")
        i = j
    return " ".join(out)


def inverse(word: Word) -> Word:
    return tuple((g, -e) for g, e in reversed(word))


def least_rotation(word: Word) -> Word:
    if not word:
        return ()
    return min(word[i:] + word[:i] for i in range(len(word)))


def canonical_word(word: Word) -> Word:
    """Least cyclic rotation of the word or its inverse."""
    return min(least_rotation(tuple(word)), least_rotation(inverse(tuple(word))))


def shift_word(word: Word, k: int, n: int) -> Word:
    return tuple(((g - 1 + k) % n + 1, e) for g, e in word)


def relator_of_curve(diagram: Diagram, curve) -> Word:
    word = []
    for arc_id, direction in curve:
        arc = diagram.arcs[arc_id]
        end = arc.ends[1] if direction > 0 else arc.ends[0]
        word.append(diagram.crossing(end))
    return tuple(word)


def presentation_of(params) -> GroupPresentation:
    """pi_1 presentation of M(a, b, c, n, r, s): one generator per handle,
    one relator per traced curve, each in canonical form."""
    diagram = params if isinstance(params, Diagram) else build_diagram(params)
    n = diagram.params.n
    adm = is_admissible(diagram)
    if not adm:
        why = f"{adm.curves.count} curves, expected {n}" if adm.curves.count != n \
            else "complement of the curves is disconnected"
        raise AdmissibilityError(f"D{diagram.params} is not admissible: {why}")
    return GroupPresentation(
        n, tuple(canonical_word(relator_of_curve(diagram, c)) for c in adm.curves)
    )


def is_cyclic_presentation(pres: GroupPresentation) -> bool:
    """True iff the relators can be ordered r_1..r_n with r_{i+1} the index
    shift of r_i (words compared up to cyclic rotation and inversion)."""
    n = pres.generator_count
    if len(pres.relators) != n:
        return False
    if n == 0:
        return True
    have = sorted(canonical_word(w) for w in pres.relators)
    want = sorted(canonical_word(shift_word(pres.relators[0], k, n)) for k in range(n))
    return have == want


def abelianization(pres: GroupPresentation) -> IntegerMatrix:
    """Relator-by-generator matrix of exponent sums."""
    n = pres.generator_count
    rows = []
    for w in pres.relators:
        row = [0] * n
        for g, e in w:
            row[g - 1] += e
        rows.append(row)
    return IntegerMatrix.from_rows(rows, cols=n)
