"""Decompose the complete graph K_n into the minimum number of edge-disjoint trees."""

from .decompose import DecompositionTrace, decompose, deck_e, deck_o
from .graph import Edge, TreeCover, canonical_edge, complete_edge_count, enumerate_edges, successor
from .params import (
    ParamRow,
    SmallGraph,
    arboricity_formula,
    lemma1_feasible,
    nash_williams_sparse,
    param_table,
    size_sequence,
    stp_bipartite,
    stp_complete,
    tau_complete,
    tutte_packing_condition,
)
from .search import brute_force_min_trees
from .verify import VerificationReport, is_tree, verify_cover

__all__ = [
    "DecompositionTrace",
    "Edge",
    "ParamRow",
    "SmallGraph",
    "TreeCover",
    "VerificationReport",
    "arboricity_formula",
    "brute_force_min_trees",
    "canonical_edge",
    "complete_edge_count",
    "deck_e",
    "deck_o",
    "decompose",
    "enumerate_edges",
    "is_tree",
    "lemma1_feasible",
    "nash_williams_sparse",
    "param_table",
    "size_sequence",
    "stp_bipartite",
    "stp_complete",
    "successor",
    "tau_complete",
    "tutte_packing_condition",
    "verify_cover",
]
