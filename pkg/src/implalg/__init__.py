"""Finite implication algebras, hypergraphs and Boolean polymatroids.

Subsets of a ground set or of an index set are ``int`` bitmasks
throughout: bit ``i`` stands for vertex/index ``i``.
"""

from .algebra import (
    ImplicationAlgebra,
    check_abbott_axioms,
    coatoms,
    elements,
    enveloping_ground,
    from_hypergraph,
    implies,
    interval_height,
    join,
    meet_opt,
    minimal_elements,
    to_hypergraph,
)
from .hypergraph import (
    EdgeFamily,
    Hypergraph,
    enumerate_hypergraphs,
    intersection_size,
    is_sperner,
    maximal_reduction,
    new_hypergraph,
    union_size,
)
from .iso import IsoWitness, algebra_iso, hypergraph_iso, poset_iso_oracle, profile_iso
from .polymatroid import (
    PolymatroidFn,
    Recognition,
    Rejection,
    is_polymatroid,
    profile_from_rho,
    recognize_boolean,
    rho_from_profile,
    rho_of_hypergraph,
)
from .profile import (
    Profile,
    Verdict,
    Violation,
    check_realizability_conditions,
    compute_profile,
    derive_pA,
    derive_qA,
    is_decreasing,
    is_paper_submodular,
    profile_at,
)
from .synth import DegeneracyReport, degeneracy, realize, realize_to_hypergraph

__version__ = "0.1.0"

__all__ = [
    "ImplicationAlgebra",
    "check_abbott_axioms",
    "coatoms",
    "elements",
    "enveloping_ground",
    "from_hypergraph",
    "implies",
    "interval_height",
    "join",
    "meet_opt",
    "minimal_elements",
    "to_hypergraph",
    "EdgeFamily",
    "Hypergraph",
    "enumerate_hypergraphs",
    "intersection_size",
    "is_sperner",
    "maximal_reduction",
    "new_hypergraph",
    "union_size",
    "IsoWitness",
    "algebra_iso",
    "hypergraph_iso",
    "poset_iso_oracle",
    "profile_iso",
    "PolymatroidFn",
    "Recognition",
    "Rejection",
    "is_polymatroid",
    "profile_from_rho",
    "recognize_boolean",
    "rho_from_profile",
    "rho_of_hypergraph",
    "Profile",
    "Verdict",
    "Violation",
    "check_realizability_conditions",
    "compute_profile",
    "derive_pA",
    "derive_qA",
    "is_decreasing",
    "is_paper_submodular",
    "profile_at",
    "DegeneracyReport",
    "degeneracy",
    "realize",
    "realize_to_hypergraph",
]
