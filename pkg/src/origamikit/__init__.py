"""
origamikit: square-tiled translation surfaces.

Veech groups, cusps, cylinder decompositions, exact Siegel-Veech
constants and closed saddle connection checks, computed from the pair of
gluing permutations.
"""

from .counting import CuspSpectrum, SVConstants, cusp_spectra, sv_constants
from .cylinders import (
    Cylinder,
    SaddleSegment,
    closed_saddle_report,
    direction_decomposition,
    direction_segments,
    fiber_partition,
    horizontal_decomposition,
    horizontal_saddle_segments,
)
from .enumeration import SaddleVector, brute_force_closed_check, empirical_constants, enumerate_saddles
from .origami import (
    AffineAutomorphism,
    Origami,
    RotatedGluingSurface,
    Singularity,
    automorphism_group,
    canonical_form,
    cyclic_cover,
    genus,
    is_isomorphic,
    new_origami,
    read_origami,
    singularities,
    stratum,
    vertex_permutation,
)
from .perm import Permutation, commutator, compose, cycle_type, inverse, parse_cycles, print_cycles
from .veech import CosetGraph, Cusp, apply_sl2z, coset_permutations, cusps, normalizing_word, orbit

__version__ = "0.1.0"

__all__ = [
    "AffineAutomorphism",
    "CosetGraph",
    "Cusp",
    "CuspSpectrum",
    "Cylinder",
    "Origami",
    "Permutation",
    "RotatedGluingSurface",
    "SVConstants",
    "SaddleSegment",
    "SaddleVector",
    "Singularity",
    "apply_sl2z",
    "automorphism_group",
    "brute_force_closed_check",
    "canonical_form",
    "closed_saddle_report",
    "commutator",
    "compose",
    "coset_permutations",
    "cusp_spectra",
    "cusps",
    "cycle_type",
    "cyclic_cover",
    "direction_decomposition",
    "direction_segments",
    "empirical_constants",
    "enumerate_saddles",
    "fiber_partition",
    "genus",
    "horizontal_decomposition",
    "horizontal_saddle_segments",
    "inverse",
    "is_isomorphic",
    "new_origami",
    "normalizing_word",
    "orbit",
    "parse_cycles",
    "print_cycles",
    "read_origami",
    "singularities",
    "stratum",
    "sv_constants",
    "vertex_permutation",
]
