"""Exact computations with Z_2^k-symmetric structures on nilpotent Lie algebras.

Submodules: linalg (rational matrices and subspaces), lie (structure
constants), aut_h3 (automorphisms of h_3), gradings, metrics (invariant
forms), connections, scenarios and cli.
"""

from .linalg import Matrix, Signature, Subspace, intersect, kernel, rref, signature, solve_affine
from .lie import LieAlgebra, abelian, bracket, center, check_jacobi, filiform_l5, heisenberg, is_automorphism
from .gradings import Grading, GradingName, check_grading, grading_from_involutions, heisenberg_grading
from .metrics import (
    ReductiveSplit,
    SymBilinearForm,
    classify_metric,
    common_radical,
    invariant_form_space,
    isotropy_rep,
    reductive_split,
)
from .connections import (
    ConnectionMap,
    curvature,
    first_canonical,
    heisenberg_flat_family,
    second_canonical,
    torsion,
    torsion_free_adapted_space,
)

__version__ = "0.1.0"

__all__ = [
    "ConnectionMap",
    "Grading",
    "GradingName",
    "LieAlgebra",
    "Matrix",
    "ReductiveSplit",
    "Signature",
    "Subspace",
    "SymBilinearForm",
    "abelian",
    "bracket",
    "center",
    "check_grading",
    "check_jacobi",
    "classify_metric",
    "common_radical",
    "curvature",
    "filiform_l5",
    "first_canonical",
    "grading_from_involutions",
    "heisenberg",
    "heisenberg_flat_family",
    "heisenberg_grading",
    "intersect",
    "invariant_form_space",
    "is_automorphism",
    "isotropy_rep",
    "kernel",
    "reductive_split",
    "rref",
    "second_canonical",
    "signature",
    "solve_affine",
    "torsion",
    "torsion_free_adapted_space",
]
