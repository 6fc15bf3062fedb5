"""Chromatic symmetric functions of graphs and Schur positivity of spiders.

Partitions are tuples in weakly decreasing order. Symmetric functions are
dicts mapping a partition to an exact integer coefficient.
"""

from ._csf import (
    Graph,
    IoError,
    OverflowError,
    UnsupportedSizeError,
    character,
    chromatic_polynomial,
    coloring_monomials,
    complete_graph,
    conjugate,
    csf_power,
    csf_schur,
    cycle_graph,
    dominance_screen,
    dominates,
    expand_spider,
    hub_leaf_reduction_check,
    kostka,
    p_to_s,
    partitions_of,
    path_graph,
    s_to_m,
    spider,
    stable_partition_types,
    star_graph,
    verify,
    verify_json,
)

__all__ = [name for name in dir() if not name.startswith("_")]
