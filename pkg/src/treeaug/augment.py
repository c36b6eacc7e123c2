"""Entry point that picks the path or non-path procedure for a tree."""

from __future__ import annotations

from typing import Callable

from .augset import AugmentationSet
from .blocktree import BlockTree
from .bounds import check_target
from .errors import PreconditionError
from .graph import Graph, is_path, is_tree
from .nonpath import DEFAULT_LEAF_ORDERS, DEFAULT_SEARCH_BUDGET, nonpath_augmentation
from .path import path_augmentation


def augment_tree(
    t: Graph,
    r: int,
    tie_break: str = "search",
    trace: Callable[[BlockTree], None] | None = None,
    budget: int = DEFAULT_SEARCH_BUDGET,
    leaf_orders: int = DEFAULT_LEAF_ORDERS,
) -> tuple[Graph, AugmentationSet]:
    """r-connected supergraph of the tree ``t`` and the edges that were added.

    Paths get the Harary construction. Other trees get the block-tree
    rounds; ``tie_break`` selects between always taking the lowest-label
    candidate (``"lowest"``) and backtracking over the candidates the rules
    allow, across depth-first leaf orders (``"search"``).
    """
    if not is_tree(t):
        raise PreconditionError("input graph is not a tree")
    check_target(t.n, r)
    if is_path(t):
        return path_augmentation(t, r)
    return nonpath_augmentation(t, r, trace=trace, tie_break=tie_break, budget=budget, leaf_orders=leaf_orders)
