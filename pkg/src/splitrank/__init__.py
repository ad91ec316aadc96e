"""Splitting ranks of symmetric spaces of non-compact type, computed from restricted root data."""

from .catalog import (
    POINT,
    MultiplicityMap,
    SymmetricSpaceEntry,
    UnknownSpaceError,
    catalog_entries,
    dimension,
    identify,
    identify_component,
    instantiate,
    lookup,
)
from .hall import build_instance, find_matching, q_sum_dim, random_frames, verify_cardinality
from .products import ProductSpace, has_forbidden_factor, min_plus, si_profile, verify_theorem_brain
from .roots import Covector, DynkinFamily, Root, RestrictedRootSystem, build_root_system, span_closure
from .srk import (
    SplitRankProfile,
    TruncationResult,
    gap_table,
    oracle_splitting_rank_k,
    profile,
    splitting_rank,
    splitting_rank_k,
    truncations,
    verify_k_srk_inequality,
)

__version__ = "0.1.0"
