"""Exact minimal vertex covers and maximizing well-orders over eventually
periodic subsets of the naturals."""

from ._core import (
    BlockOrder,
    Card,
    Cut,
    EpSet,
    Hypergraph,
    HypercoverError,
    WitnessedCover,
    brute_minimal_covers,
    build_closure_chain,
    build_maximizing,
    compare,
    disjointify,
    dump_instance,
    edge_max,
    find_witness,
    generate,
    is_cover,
    is_good_cut,
    is_maximizing,
    extract_cover,
    layered_cover,
    layered_order,
    minimalize,
    pairwise_transversal,
    parse_instance,
    r_closure,
    solve_brute,
    solve_maxwo,
    two_tier_cover,
    verify_witnessed_cover,
)

__all__ = [
    "BlockOrder",
    "Card",
    "Cut",
    "EpSet",
    "Hypergraph",
    "HypercoverError",
    "WitnessedCover",
    "brute_minimal_covers",
    "build_closure_chain",
    "build_maximizing",
    "compare",
    "disjointify",
    "dump_instance",
    "edge_max",
    "find_witness",
    "generate",
    "is_cover",
    "is_good_cut",
    "is_maximizing",
    "extract_cover",
    "layered_cover",
    "layered_order",
    "minimalize",
    "pairwise_transversal",
    "parse_instance",
    "r_closure",
    "solve_brute",
    "solve_maxwo",
    "two_tier_cover",
    "verify_witnessed_cover",
]
