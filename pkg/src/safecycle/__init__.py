"""safecycle: safety of cycle precolourings in planar graphs.

Classify proper k-colourings of a cycle as bad, good, or neither; build
the explicit near-triangulations that witness unsafety of bad colourings;
constructively extend any good colouring over any chordless
near-triangulation; and verify all of it against a brute-force oracle over
exhaustively enumerated disk triangulations.
"""

from .classify import (
    BadWitness,
    EquivalenceClass,
    GoodWitness,
    canonicalize,
    enumerate_colourings,
    is_bad,
    is_good,
    verdict,
)
from .core import (
    ArcInterval,
    CycleColouring,
    NearTriangulation,
    arc_colour_set,
    find_chord,
    find_separating_triangle,
    is_chordless,
    split_at_chord,
    validate_near_triangulation,
)
from .enumeration import (
    ProbeVerdict,
    brute_force_extend,
    conjecture_explorer,
    enumerate_disk_triangulations,
    exhaustive_extend,
    safety_probe,
)
from .errors import InternalInvariantError, ValidationError
from .extend import (
    EdgeLabel,
    FeasibleResult,
    ListAssignment,
    colour_permutation_setup,
    lemma_one_extend,
    lemma_three_feasible,
    lemma_two_feasible,
    theorem_main_extend,
)
from .gadgets import Gadget, gadget_for, triangle_apex_gadget, two_apex_gadget, wheel_gadget

__version__ = "0.1.0"

__all__ = [
    "ArcInterval",
    "BadWitness",
    "CycleColouring",
    "EdgeLabel",
    "EquivalenceClass",
    "FeasibleResult",
    "Gadget",
    "GoodWitness",
    "InternalInvariantError",
    "ListAssignment",
    "NearTriangulation",
    "ProbeVerdict",
    "ValidationError",
    "arc_colour_set",
    "brute_force_extend",
    "canonicalize",
    "colour_permutation_setup",
    "conjecture_explorer",
    "enumerate_colourings",
    "enumerate_disk_triangulations",
    "exhaustive_extend",
    "find_chord",
    "find_separating_triangle",
    "gadget_for",
    "is_bad",
    "is_chordless",
    "is_good",
    "lemma_one_extend",
    "lemma_three_feasible",
    "lemma_two_feasible",
    "safety_probe",
    "split_at_chord",
    "theorem_main_extend",
    "triangle_apex_gadget",
    "two_apex_gadget",
    "validate_near_triangulation",
    "verdict",
    "wheel_gadget",
]
