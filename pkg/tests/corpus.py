"""Tree corpora shared by the tests and the acceptance runner."""

from __future__ import annotations

from functools import lru_cache

import networkx as nx

from treeaug import Graph, is_path, random_tree


def from_nx(tree: nx.Graph) -> Graph:
    return Graph.from_edges(tree.number_of_nodes(), ((u + 1, v + 1) for u, v in tree.edges()))


@lru_cache(maxsize=None)
def nonisomorphic_trees(n: int) -> tuple[Graph, ...]:
    return tuple(from_nx(t) for t in nx.nonisomorphic_trees(n))


def small_nonpath_trees(lo: int = 5, hi: int = 9) -> list[Graph]:
    return [t for n in range(lo, hi + 1) for t in nonisomorphic_trees(n) if not is_path(t)]


@lru_cache(maxsize=None)
def random_nonpath_trees(count: int = 200) -> tuple[tuple[int, Graph], ...]:
    """``count`` random trees with 10 <= n <= 20; seed k gives n = 10 + k % 11. Paths are skipped."""
    out = []
    seed = 0
    while len(out) < count:
        t = random_tree(10 + seed % 11, seed)
        if not is_path(t):
            out.append((seed, t))
        seed += 1
    return tuple(out)
