"""cslkit: exact-arithmetic coincidence site lattices of the cubic lattices.

The package computes, classifies and enumerates CSLs of the primitive, body
centered and face centered cubic lattices: coincidence indices, equivalence
classes of coincidence rotations, CSL point groups and Bravais classes - all
in exact integer/rational arithmetic, validated against brute-force lattice
oracles.
"""
from .bravais import BravaisReport, bravais, bravais_any, conventional_cell_check, table
from .cslcore import csl, csl_vectors, membership_coeff_check, sigma, sigma_ell
from .equivalence import (
    CUBIC_GROUP_24,
    CountReport,
    FormClass,
    canonical_rep,
    classify_form,
    counts,
    enumerate_classes,
    enumerate_rotations,
    equivalent,
    intersection_group,
    total_rotation_count,
)
from .lattice import (
    ExactLattice,
    cubic_lattice,
    hnf_canonicalize,
    index_in,
    intersect,
    point_group,
    residue_class,
)
from .quat import Quat, axis_angle, cayley, crystallographic_name, parse_quat
from .symmetry import (
    OrthDecomposition,
    SymmetryGroup,
    axis_symmetry_test,
    coprime_factor_check,
    decompose_orthogonal,
    is_symmetry_operation,
    minimal_symmetry_group,
    symmetry_group,
    twofold_symmetries,
)

__version__ = "0.1.0"

__all__ = [
    "BravaisReport", "CountReport", "CUBIC_GROUP_24", "ExactLattice", "FormClass",
    "OrthDecomposition", "Quat", "SymmetryGroup",
    "axis_angle", "axis_symmetry_test", "bravais", "bravais_any", "canonical_rep",
    "cayley", "classify_form", "conventional_cell_check", "coprime_factor_check",
    "counts", "crystallographic_name", "csl", "csl_vectors", "cubic_lattice",
    "decompose_orthogonal", "enumerate_classes", "enumerate_rotations", "equivalent",
    "hnf_canonicalize", "index_in", "intersect", "intersection_group",
    "is_symmetry_operation", "membership_coeff_check", "minimal_symmetry_group",
    "parse_quat", "point_group", "residue_class", "sigma", "sigma_ell",
    "symmetry_group", "table", "total_rotation_count", "twofold_symmetries",
]
