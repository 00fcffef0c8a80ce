"""Combinatorial Dunwoody diagrams D(a, b, c, n, r, s).

The diagram lives in the plane with ``n`` internal circles C'_1..C'_n on an
inner ring and ``n`` external circles C''_1..C''_n on an outer ring, C''_i
sitting radially outside C'_i.  Every circle carries ``d = 2a + b + c``
vertex slots.  The arcs come in parallel families:

* A-arcs: ``a`` arcs from C'_i to C'_{i+1} and ``a`` from C''_i to C''_{i+1},
* B-arcs: ``b`` arcs from C'_i to C''_{i-1},
* C-arcs: ``c`` arcs from C'_i to C''_i.

Slots are numbered counterclockwise.  Reading an internal circle
counterclockwise gives the blocks ``[A in][B][C][A out]``; an external circle
gives ``[A out][B][C][A in]``.  Parallel arcs of a family join the k-th slot
of one block to the k-th slot from the end of the other (a band reverses
orientation).

Labels: slot x of C'_i carries label x + 1.  Slot y of C''_i carries the label
l with l = -y - r (mod d), so external labels run clockwise and the rotation
parameter r only moves the external labelling.  C'_i is glued to C''_{i+s}
identifying equally labelled vertices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Dict, Tuple

from .errors import DomainError

INTERNAL = "internal"
EXTERNAL = "external"

DIAGRAM_FORMAT = "dunwoody-diagram"
DIAGRAM_FORMAT_VERSION = 1

# (side, circle index in 1..n, label in 1..d)
Vertex = Tuple[str, int, int]


def _check_int(name, value):
    if isinstance(value, bool) or not isinstance(value, int):
        raise DomainError(f"{name} must be an integer, got {value!r}")


@dataclass(frozen=True)
class DunwoodyParams:
    """The six integers (a, b, c, n, r, s); r and s are stored reduced."""

    a: int
    b: int
    c: int
    n: int
    r: int = 0
    s: int = 0

    def __post_init__(self):
        for name in ("a", "b", "c", "n", "r", "s"):
            _check_int(name, getattr(self, name))
        if self.a < 0 or self.b < 0 or self.c < 0:
            raise DomainError(
                f"a, b, c must be nonnegative, got ({self.a}, {self.b}, {self.c})"
            )
        if self.n < 1:
            raise DomainError(f"n must be positive, got {self.n}")
        d = self.d
        object.__setattr__(self, "r", self.r % d if d else 0)
        object.__setattr__(self, "s", self.s % self.n)

    @property
    def d(self) -> int:
        return 2 * self.a + self.b + self.c

    def as_tuple(self):
        return (self.a, self.b, self.c, self.n, self.r, self.s)

    def __str__(self):
        return "({},{},{},{},{},{})".format(*self.as_tuple())


@dataclass(frozen=True)
class Circle:
    side: str
    index: int
    labels: Tuple[int, ...]  # label at each slot, counterclockwise


@dataclass(frozen=True)
class Arc:
    """An arc of the second curve system.

    ``ends[0]`` is on C'_i for B- and C-arcs and on the ``A out`` block for
    A-arcs.  ``position`` is the slot offset inside the block at ``ends[0]``.
    """

    id: int
    family: str
    circle: int
    position: int
    ends: Tuple[Vertex, Vertex]

    @property
    def side(self) -> str:
        """Side of the A-family (internal or external); B/C arcs report INTERNAL."""
        return self.ends[0][0]


@dataclass(frozen=True)
class Diagram:
    params: DunwoodyParams
    circles: Tuple[Circle, ...]
    arcs: Tuple[Arc, ...]
    extra_curves: Tuple[int, ...]
    gluing: Tuple[Tuple[Vertex, Vertex], ...]
    _arc_at: Dict[Vertex, int] = field(repr=False, compare=False, default_factory=dict)
    _glued: Dict[Vertex, Vertex] = field(repr=False, compare=False, default_factory=dict)

    def arc_at(self, vertex: Vertex) -> Arc:
        return self.arcs[self._arc_at[vertex]]

    def glued(self, vertex: Vertex) -> Vertex:
        return self._glued[vertex]

    def crossing(self, vertex: Vertex) -> Tuple[int, int]:
        """Handle letter (generator, exponent) for passing through ``vertex``.

        Generator j is the handle obtained by gluing C'_j to C''_{j+s}.
        Leaving the internal side counts +1, leaving the external side -1.
        """
        side, index, _ = vertex
        if side == INTERNAL:
            return index, 1
        n, s = self.params.n, self.params.s
        return (index - 1 - s) % n + 1, -1


@dataclass(frozen=True)
class CurveSystem:
    """Closed curves traced on a diagram.

    Each curve is a cyclic tuple of ``(arc id, direction)`` steps, with
    direction +1 meaning ``ends[0] -> ends[1]``.  The extra curves of a
    trivial diagram cross no arcs and appear as empty tuples.
    """

    curves: Tuple[Tuple[Tuple[int, int], ...], ...]

    @property
    def count(self) -> int:
        return len(self.curves)

    def __len__(self):
        return len(self.curves)

    def __iter__(self):
        return iter(self.curves)


def _block_starts(a, b, c):
    internal = {"Ain": 0, "B": a, "C": a + b, "Aout": a + b + c}
    external = {"Aout": 0, "B": a, "C": a + b, "Ain": a + b + c}
    return internal, external


def build_diagram(params: DunwoodyParams) -> Diagram:
    """Build D(a, b, c, n, r, s) with the slot and label convention above."""
    if not isinstance(params, DunwoodyParams):
        params = DunwoodyParams(*params)
    a, b, c, n, r, s = params.as_tuple()
    d = params.d

    def wrap(i):
        return (i - 1) % n + 1

    def int_vertex(i, slot):
        return (INTERNAL, wrap(i), slot + 1)

    def ext_vertex(i, slot):
        return (EXTERNAL, wrap(i), (-slot - r - 1) % d + 1)

    circles = []
    for i in range(1, n + 1):
        circles.append(Circle(INTERNAL, i, tuple(range(1, d + 1))))
    for i in range(1, n + 1):
        circles.append(
            Circle(EXTERNAL, i, tuple(ext_vertex(i, y)[2] for y in range(d)))
        )

    if d == 0:
        return Diagram(
            params=params,
            circles=tuple(circles),
            arcs=(),
            extra_curves=tuple(range(1, n + 1)),
            gluing=(),
        )

    si, se = _block_starts(a, b, c)
    arcs = []

    def add(family, i, k, u, v):
        arcs.append(Arc(len(arcs), family, i, k, (u, v)))

    for i in range(1, n + 1):
        for k in range(a):
            add("A", i, k, int_vertex(i, si["Aout"] + k),
                int_vertex(i + 1, si["Ain"] + a - 1 - k))
        for k in range(a):
            add("A", i, k, ext_vertex(i, se["Aout"] + k),
                ext_vertex(i + 1, se["Ain"] + a - 1 - k))
        for k in range(b):
            add("B", i, k, int_vertex(i, si["B"] + k),
                ext_vertex(i - 1, se["B"] + b - 1 - k))
        for k in range(c):
            add("C", i, k, int_vertex(i, si["C"] + k),
                ext_vertex(i, se["C"] + c - 1 - k))

    arc_at = {}
    for arc in arcs:
        for v in arc.ends:
            arc_at[v] = arc.id

    gluing = []
    glued = {}
    for i in range(1, n + 1):
        for label in range(1, d + 1):
            u = (INTERNAL, i, label)
            v = (EXTERNAL, wrap(i + s), label)
            gluing.append((u, v))
            glued[u] = v
            glued[v] = u

    return Diagram(
        params=params,
        circles=tuple(circles),
        arcs=tuple(arcs),
        extra_curves=(),
        gluing=tuple(gluing),
        _arc_at=arc_at,
        _glued=glued,
    )


def next_step(diagram: Diagram, arc_id: int, direction: int) -> Tuple[int, int]:
    """The step following ``(arc_id, direction)`` after passing the handle."""
    arc = diagram.arcs[arc_id]
    end = arc.ends[1] if direction > 0 else arc.ends[0]
    start = diagram.glued(end)
    nxt = diagram.arc_at(start)
    return nxt.id, 1 if nxt.ends[0] == start else -1


def trace_curves(diagram: Diagram) -> CurveSystem:
    """Partition the arcs into the closed curves of the glued diagram."""
    if diagram.params.d == 0:
        return CurveSystem(tuple(() for _ in diagram.extra_curves))
    used = [False] * len(diagram.arcs)
    curves = []
    for arc in diagram.arcs:
        if used[arc.id]:
            continue
        step = (arc.id, 1)
        curve = []
        while True:
            used[step[0]] = True
            curve.append(step)
            step = next_step(diagram, *step)
            if step == curve[0]:
                break
        curves.append(tuple(curve))
    return CurveSystem(tuple(curves))


def _slot_index(diagram: Diagram):
    """vertex -> (circle labels, slot) for every vertex of the diagram."""
    where = {}
    for circle in diagram.circles:
        for slot, label in enumerate(circle.labels):
            where[(circle.side, circle.index, label)] = (circle, slot)
    return where


def trace_faces(diagram: Diagram):
    """Faces of the planar map cut out by the circles and arcs.

    A face is a cyclic tuple of darts ``(arc id, direction)`` and lies to the
    left of each of them: after reaching a circle the boundary walk turns
    clockwise to the neighbouring slot and leaves along that slot's arc.
    """
    where = _slot_index(diagram)
    used = set()
    faces = []
    for arc in diagram.arcs:
        for direction in (1, -1):
            dart = (arc.id, direction)
            if dart in used:
                continue
            face = []
            while dart not in used:
                used.add(dart)
                face.append(dart)
                a = diagram.arcs[dart[0]]
                end = a.ends[1] if dart[1] > 0 else a.ends[0]
                circle, slot = where[end]
                nxt = (circle.side, circle.index, circle.labels[slot - 1])
                b = diagram.arc_at(nxt)
                dart = (b.id, 1 if b.ends[0] == nxt else -1)
            faces.append(tuple(face))
    return faces


def complement_connected(diagram: Diagram) -> bool:
    """Whether the closed surface minus the curve system is connected.

    Planar faces are joined across every glued pair of circle segments.
    """
    if diagram.params.d == 0:
        return True
    faces = trace_faces(diagram)
    where = _slot_index(diagram)
    face_of_segment = {}
    for f, face in enumerate(faces):
        for arc_id, direction in face:
            a = diagram.arcs[arc_id]
            end = a.ends[1] if direction > 0 else a.ends[0]
            circle, slot = where[end]
            # the walk runs from this slot to the clockwise neighbour
            face_of_segment[(end, (circle.side, circle.index,
                                   circle.labels[slot - 1]))] = f
    parent = list(range(len(faces)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    shared = [face_of_segment[seg] for seg in _shared_segments(diagram)]
    for f in shared[1:]:
        parent[find(f)] = find(shared[0])

    for circle in diagram.circles:
        if circle.side != INTERNAL:
            continue
        labels = circle.labels
        for slot in range(len(labels)):
            u = (INTERNAL, circle.index, labels[slot])
            w = (INTERNAL, circle.index, labels[slot - 1])
            # gluing reverses orientation: u -> w clockwise on C'_i matches
            # glued(w) -> glued(u) clockwise on the external circle
            here = face_of_segment[(u, w)]
            there = face_of_segment[(diagram.glued(w), diagram.glued(u))]
            parent[find(here)] = find(there)
    return len({find(f) for f in range(len(faces))}) == 1


def _shared_segments(diagram: Diagram):
    """Circle segments lying in one planar region shared by several components.

    Face tracing treats each connected component of the map on its own, so
    the region in which components sit side by side is split.  The map is
    disconnected only when a = 0 (one spoke of B- or C-arcs per circle pair,
    all facing the centre through the wrap-around segment of C'_i) or when
    b = c = 0 (an inner and an outer ring of A-arcs facing each other across
    the gap between the two A blocks).
    """
    a, b, c = diagram.params.a, diagram.params.b, diagram.params.c
    d = diagram.params.d
    n = diagram.params.n
    by_key = {(ci.side, ci.index): ci.labels for ci in diagram.circles}

    def seg(side, i, slot):
        labels = by_key[(side, i)]
        return ((side, i, labels[slot % d]), (side, i, labels[(slot - 1) % d]))

    if a == 0:
        return [seg(INTERNAL, i, 0) for i in range(1, n + 1)]
    if b == c == 0:
        return [seg(INTERNAL, 1, a), seg(EXTERNAL, 1, a)]
    return []


@dataclass(frozen=True)
class Admissibility:
    admissible: bool
    curves: CurveSystem
    connected: bool  # complement of the curves in the surface is connected

    def __bool__(self):
        return self.admissible


def is_admissible(params) -> Admissibility:
    """True iff the glued diagram is a genus-n Heegaard diagram.

    That is: the arcs close up into exactly n curves and cutting the surface
    along them leaves it connected.  The result is truthy/falsy and carries
    the traced curves.
    """
    diagram = params if isinstance(params, Diagram) else build_diagram(params)
    curves = trace_curves(diagram)
    connected = complement_connected(diagram)
    return Admissibility(curves.count == diagram.params.n and connected, curves, connected)


def cyclic_action(diagram: Diagram, shift: int = 1) -> Tuple[int, ...]:
    """Arc permutation induced by relabelling circles i -> i + shift."""
    n = diagram.params.n
    index = {(arc.family, arc.side, arc.circle, arc.position): arc.id
             for arc in diagram.arcs}
    return tuple(
        index[(arc.family, arc.side, (arc.circle - 1 + shift) % n + 1, arc.position)]
        for arc in diagram.arcs
    )


def diagram_to_dict(diagram: Diagram) -> dict:
    def vertex(v):
        return {"side": v[0], "circle": v[1], "label": v[2]}

    return {
        "format": DIAGRAM_FORMAT,
        "version": DIAGRAM_FORMAT_VERSION,
        "params": dict(zip("abcnrs", diagram.params.as_tuple())),
        "d": diagram.params.d,
        "circles": [
            {"side": c.side, "index": c.index, "labels": list(c.labels)}
            for c in diagram.circles
        ],
        "arcs": [
            {
                "id": arc.id,
                "class": arc.family,
                "circle": arc.circle,
                "position": arc.position,
                "ends": [vertex(v) for v in arc.ends],
            }
            for arc in diagram.arcs
        ],
        "extraCurves": list(diagram.extra_curves),
        "gluing": [[vertex(u), vertex(v)] for u, v in diagram.gluing],
    }


def dumps_diagram(diagram: Diagram) -> str:
    return json.dumps(diagram_to_dict(diagram), sort_keys=True, separators=(",", ":"))
