"""Dunwoody diagrams, their cyclic presentations and first homology, and the
Dunwoody 4-tuple parametrization of torus knots."""

from .covering import branched_cover_params, covering_shift, orientation_counts
from .diagram import (
    CurveSystem,
    Diagram,
    DunwoodyParams,
    build_diagram,
    is_admissible,
    trace_curves,
)
from .errors import AdmissibilityError, AmbiguousShiftError, DomainError, RecurrenceError
from .homology import AbelianGroupStructure, IntegerMatrix, first_homology, smith_normal_form
from .oracle import IntPoly, alexander_torus, fox_homology_order, resultant
from .presentation import (
    GroupPresentation,
    abelianization,
    is_cyclic_presentation,
    presentation_of,
)
from .torusknot import (
    EpsilonSequence,
    KnotCode,
    epsilon_sequence,
    torus_family_code,
    torus_knot_code,
)

__version__ = "0.1.0"
