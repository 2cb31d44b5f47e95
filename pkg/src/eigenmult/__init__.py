"""Exact eigenvalue-multiplicity toolkit for small graphs.

Computes adjacency-eigenvalue multiplicities over algebraic numbers of the
form 2cos(p*pi/q) in exact arithmetic, provides the structural graph
families and invariants (cyclomatic number, pendant paths, distance-s
pendant sets), and verifies the multiplicity bound m <= 2c + q_s and its
equality characterizations by construction and exhaustive enumeration.
"""

from .algebraic import (
    AlgebraicNumber,
    FieldElement,
    FieldMatrix,
    constrained_eigenspace_dim,
    default_lambda_set,
    is_downer,
    multiplicity,
    rank_multiplicity,
)
from .characterize import (
    ClassificationVerdict,
    check_bound,
    classify_pendant_bound,
    classify_tree,
    classify_unicyclic,
    dispatch_classify,
    family_membership,
    lambda_optimal,
)
from .graphs import Graph, from_edge_list
from .polynomials import IntPoly, charpoly, cos_pi_minimal_poly
from .sweep import SweepRecord, SweepReport, sweep

__version__ = "0.1.0"

__all__ = [
    "AlgebraicNumber",
    "ClassificationVerdict",
    "FieldElement",
    "FieldMatrix",
    "Graph",
    "IntPoly",
    "SweepRecord",
    "SweepReport",
    "charpoly",
    "check_bound",
    "classify_pendant_bound",
    "classify_tree",
    "classify_unicyclic",
    "constrained_eigenspace_dim",
    "cos_pi_minimal_poly",
    "default_lambda_set",
    "dispatch_classify",
    "family_membership",
    "from_edge_list",
    "is_downer",
    "lambda_optimal",
    "multiplicity",
    "rank_multiplicity",
    "sweep",
]
