"""Exact scoring-rule tallies, Condorcet losers and witness profiles."""

from .core import (
    MajorityMatrix,
    Profile,
    ScoreVector,
    antiplurality_vector,
    borda_vector,
    condorcet_loser,
    insert_alternative,
    is_borda,
    k_approval_vector,
    majority_margins,
    merge_profiles,
    plurality_vector,
    position_counts,
    rank,
    relabel_profile,
    replicate_profile,
    restrict_profile,
    total_scores,
    uniform_profile,
    winners,
)
from .errors import BudgetExceeded, ConstructionFault, DomainError, NotApplicable
from .notation import format_profile, parse_profile, parse_score_vector
from .reduce import Reduction, ReductionCase, classify, derived_vectors, sub_conditions
from .verify import Verdicts, verify_witness
from .witness3 import WitnessParameters, case_of, witness_three
from .witnessgen import WitnessReport, witness

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "ConstructionFault",
    "DomainError",
    "MajorityMatrix",
    "NotApplicable",
    "Profile",
    "Reduction",
    "ReductionCase",
    "ScoreVector",
    "Verdicts",
    "WitnessParameters",
    "WitnessReport",
    "antiplurality_vector",
    "borda_vector",
    "case_of",
    "classify",
    "condorcet_loser",
    "derived_vectors",
    "format_profile",
    "insert_alternative",
    "is_borda",
    "k_approval_vector",
    "majority_margins",
    "merge_profiles",
    "parse_profile",
    "parse_score_vector",
    "plurality_vector",
    "position_counts",
    "rank",
    "relabel_profile",
    "replicate_profile",
    "restrict_profile",
    "sub_conditions",
    "total_scores",
    "uniform_profile",
    "verify_witness",
    "winners",
    "witness",
    "witness_three",
]
