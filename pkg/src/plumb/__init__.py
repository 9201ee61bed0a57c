"""Exact arithmetic for linear plumbings and rational blow-down surgery.

The package computes, with integer/rational arithmetic only: intersection
forms of plumbing forests and their classical invariants, lens-space
boundaries of linear chains via negative continued fractions, the parametric
surgery families and their blow-up certificates, lattice obstructions
((-1)-classes, evenness, definiteness), and homology-level Kirby calculus.
"""

from .families import (
    HandlebodyModel,
    InvariantDelta,
    TorusKnotDescriptor,
    blowdown_delta,
    blowup_chain,
    bp_boundary,
    bp_first_homology_order,
    cp_chain,
    framing,
    handlebody_boundary,
    handlebody_model,
    knot_descriptor,
    verify_blowup,
)
from .graphs import (
    InvariantReport,
    PlumbingGraph,
    SymIntMatrix,
    chain_weights,
    graph_from_dict,
    intersection_matrix,
    invariants,
    linear_chain,
    parse_graph,
)
from .kirby import FramedPresentation, embedding_presentation, replay_embedding
from .lattice import (
    DefinitenessCertificate,
    NormSearchResult,
    enumerate_norm_vectors,
    has_minus_one_class,
    is_even,
    is_negative_definite,
    vectors_of_norm,
)
from .lens import (
    S3,
    S1XS2,
    Boundary3Manifold,
    chain_boundary,
    hj_expand,
    lens_equiv,
    lens_reverse,
    lens_space,
    neg_cf_eval,
)
from .reports import CheckResult, VerificationReport

__version__ = "0.1.0"

__all__ = [
    "Boundary3Manifold",
    "CheckResult",
    "DefinitenessCertificate",
    "FramedPresentation",
    "HandlebodyModel",
    "InvariantDelta",
    "InvariantReport",
    "NormSearchResult",
    "PlumbingGraph",
    "S1XS2",
    "S3",
    "SymIntMatrix",
    "TorusKnotDescriptor",
    "VerificationReport",
    "blowdown_delta",
    "blowup_chain",
    "bp_boundary",
    "bp_first_homology_order",
    "chain_boundary",
    "chain_weights",
    "cp_chain",
    "embedding_presentation",
    "enumerate_norm_vectors",
    "framing",
    "graph_from_dict",
    "handlebody_boundary",
    "handlebody_model",
    "has_minus_one_class",
    "hj_expand",
    "intersection_matrix",
    "invariants",
    "is_even",
    "is_negative_definite",
    "knot_descriptor",
    "lens_equiv",
    "lens_reverse",
    "lens_space",
    "linear_chain",
    "neg_cf_eval",
    "parse_graph",
    "replay_embedding",
    "vectors_of_norm",
    "verify_blowup",
]
