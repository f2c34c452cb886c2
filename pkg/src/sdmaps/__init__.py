"""Sphere maps as dart permutations: duality, antipodal self-duality, symmetric cycles."""

from .antipodality import (
    AntipodalVerdict,
    InvolutiveLabeling,
    Label,
    is_antipodally_self_dual,
    labeling_from_involution,
    odd_edge_obstruction,
    square_extension,
    verify_involutive_labeling,
)
from .derived import DerivedMap, dual, incidence, medial, square
from .duality import (
    DualityWitness,
    dual_group,
    enumerate_dualities,
    is_involutive,
    is_self_dual,
    is_strongly_involutive,
)
from .errors import MapError
from .families import Corner, adhesion, corner, corners, cycle, ear, fixture, pancake, wheel
from .io import parse_map, serialize_map, to_dot
from .kernels import BACKEND
from .maps import (
    CombinatorialMap,
    ElementRef,
    Kind,
    MapMorphism,
    Orientation,
    automorphisms,
    build_map,
    enumerate_isomorphisms,
    euler_characteristic,
    is_isomorphic,
)
from .symmetry import (
    cycle_sides,
    enumerate_symmetric_cycles,
    is_antipodally_symmetric,
    is_symmetric_cycle,
    theorem_ant1_report,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "AntipodalVerdict", "CombinatorialMap", "Corner", "DerivedMap", "DualityWitness",
    "ElementRef", "InvolutiveLabeling", "Kind", "Label", "MapError", "MapMorphism", "Orientation",
    "adhesion", "automorphisms", "build_map", "corner", "corners", "cycle", "cycle_sides", "dual",
    "dual_group", "ear", "enumerate_dualities", "enumerate_isomorphisms", "enumerate_symmetric_cycles",
    "euler_characteristic", "fixture", "incidence", "is_antipodally_self_dual", "is_antipodally_symmetric",
    "is_involutive", "is_isomorphic", "is_self_dual", "is_strongly_involutive", "is_symmetric_cycle",
    "labeling_from_involution", "medial", "odd_edge_obstruction", "pancake", "parse_map", "serialize_map",
    "square", "square_extension", "theorem_ant1_report", "to_dot", "verify_involutive_labeling", "wheel",
]
