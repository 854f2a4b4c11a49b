"""Exact S-approximation spaces, belief structures and the bridges between them."""

from .bridges import InducedMassResult, belief_from_space, induce_belief, space_from_belief
from .core import (
    Decider,
    ElementSet,
    PreconditionError,
    SApproxError,
    SApproxSpace,
    SizeCapError,
    Universe,
    UniverseMismatchError,
    build_space,
    eval_decider,
)
from .evidence import (
    AxiomReport,
    BeliefStructure,
    EvidenceReading,
    belief_function,
    build_belief_structure,
    check_belief_axioms,
    evaluate,
    mobius,
    plausibility_function,
    zeta,
)
from .monotone import (
    InflectionSet,
    MonotonicityReport,
    check_partial_monotone,
    inflection_points,
    inflection_set,
    is_irreducible,
    reduce,
    trivial_elements,
)
from .regions import (
    QualityPair,
    RegionDecomposition,
    decompose,
    lower_approx,
    lower_quality_map,
    quality,
    upper_approx,
    upper_quality_map,
)
from .verify import CLAIM_IDS, ClaimReport, GeneratorConfig, random_belief, random_space, replay, verify_claims

__version__ = "0.1.0"
