"""Minimum augmentation of trees to r-connected graphs."""

from .augment import augment_tree
from .augset import AugmentationSet
from .blocktree import BlockTree, advance_block_tree, build_c2_block_tree, leaf_chain_edges
from .bounds import augmentation_lower_bound
from .errors import (
    InvalidTargetError,
    PatternExhaustedError,
    TreeAugError,
    UnsupportedTargetError,
)
from .graph import (
    Graph,
    SeparatorWitness,
    format_edge_list,
    is_k_connected,
    is_path,
    is_tree,
    min_vertex_separator,
    parse_edge_list,
    vertex_connectivity,
)
from .harary import HararySpec, harary_graph
from .nonpath import classify_boundary_case, nonpath_augmentation
from .oracle import brute_force_min_augmentation, random_tree, verify_augmentation
from .path import path_augmentation

__all__ = [
    "AugmentationSet",
    "BlockTree",
    "Graph",
    "HararySpec",
    "InvalidTargetError",
    "PatternExhaustedError",
    "SeparatorWitness",
    "TreeAugError",
    "UnsupportedTargetError",
    "advance_block_tree",
    "augment_tree",
    "augmentation_lower_bound",
    "brute_force_min_augmentation",
    "build_c2_block_tree",
    "classify_boundary_case",
    "format_edge_list",
    "harary_graph",
    "is_k_connected",
    "is_path",
    "is_tree",
    "leaf_chain_edges",
    "min_vertex_separator",
    "nonpath_augmentation",
    "parse_edge_list",
    "path_augmentation",
    "random_tree",
    "vertex_connectivity",
    "verify_augmentation",
]
