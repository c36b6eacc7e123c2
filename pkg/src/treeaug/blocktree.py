"""(C,i)-block trees of a leaf-chained tree.

Chaining consecutive leaves l_1..l_p of a tree with p-1 new edges closes
p-1 fundamental cycles. The block tree has three kinds of nodes:

* pi nodes, one per fundamental cycle, in chain order;
* sigma nodes, one per 2-vertex separator lying between two adjacent cycles;
* alpha nodes, one per vertex of degree i in the working graph, each hung
  under the earliest cycle that contains it.

Moving from round i to round i+1 keeps the pi/sigma skeleton and only
recomputes the alpha nodes.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, replace
from functools import cached_property
from itertools import permutations, product
from typing import Iterator

from .augset import AugmentationSet
from .errors import InconsistencyError, PreconditionError
from .graph import Graph, is_path, is_tree


@dataclass(frozen=True)
class PiDegree:
    pi: int
    degree: int


@dataclass(frozen=True)
class BlockTree:
    round: int
    tree: Graph
    leaves: tuple[int, ...]
    cycles: tuple[tuple[int, ...], ...]
    sigmas: tuple[frozenset[int], ...]
    alpha: tuple[tuple[int, ...], ...]
    host: Graph

    @property
    def s(self) -> int:
        return len(self.cycles)

    @cached_property
    def cycle_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(c) for c in self.cycles)

    def alpha_vertices(self) -> list[int]:
        return [v for group in self.alpha for v in group]

    def pi_of(self, v: int) -> int:
        for k, group in enumerate(self.alpha):
            if v in group:
                return k
        raise KeyError(v)

    def considered(self) -> list[int]:
        """Indices of pi nodes that still carry at least one alpha node."""
        return [k for k, group in enumerate(self.alpha) if group]

    def without(self, *vs: int) -> BlockTree:
        drop = set(vs)
        return replace(self, alpha=tuple(tuple(v for v in g if v not in drop) for g in self.alpha))

    def with_host(self, host: Graph) -> BlockTree:
        return replace(self, host=host)

    def adjacency(self) -> list[tuple[tuple[str, object], tuple[str, object]]]:
        """Block-tree edges as pairs of ``(kind, id)`` nodes."""
        out = []
        for si, label in enumerate(self.sigmas):
            for k, cset in enumerate(self.cycle_sets):
                if _sigma_touches(label, k, self.cycle_sets):
                    out.append((("sigma", si), ("pi", k)))
        for k, group in enumerate(self.alpha):
            for v in group:
                out.append((("pi", k), ("alpha", v)))
        return out

    def to_dot(self, name: str | None = None) -> str:
        name = name or f"block_tree_C{self.round}"
        lines = [f"graph {name} {{"]
        for k, cyc in enumerate(self.cycles):
            label = ",".join(map(str, cyc))
            lines.append(f'  pi{k} [shape=box, label="pi{k + 1}: {label}"];')
        for si, label in enumerate(self.sigmas):
            lines.append(f'  sigma{si} [shape=diamond, label="{{{",".join(map(str, sorted(label)))}}}"];')
        for v in self.alpha_vertices():
            lines.append(f'  alpha{v} [shape=circle, label="{v}"];')
        for (ka, a), (kb, b) in self.adjacency():
            lines.append(f"  {ka}{a} -- {kb}{b};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def pi_degrees(bt: BlockTree) -> list[PiDegree]:
    return [PiDegree(k, len(group)) for k, group in enumerate(bt.alpha)]


def _sigma_touches(label: frozenset[int], k: int, cycle_sets) -> bool:
    if label <= cycle_sets[k]:
        return True
    w, z = tuple(label)
    for other in (k - 1, k + 1):
        if 0 <= other < len(cycle_sets):
            if (w in cycle_sets[k] and z in cycle_sets[other]) or (z in cycle_sets[k] and w in cycle_sets[other]):
                return True
    return False


def canonical_leaf_order(t: Graph) -> list[int]:
    """Leaves in first-visit order of a DFS rooted at the lowest-label maximum-degree vertex.

    Neighbours are explored in increasing label order.
    """
    root = min(t.vertices, key=lambda v: (-t.degree(v), v))
    order = []
    seen = {root}
    stack = [root]
    while stack:
        u = stack.pop()
        if t.degree(u) == 1:
            order.append(u)
        for w in sorted(t.adjacency[u], reverse=True):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return order


def _kid_orders(t: Graph, kids: list[int]) -> Iterator[tuple[int, ...]]:
    # Sibling leaves only swap labels, never the cycle structure, so they
    # stay in increasing order; only the placement of subtrees varies.
    for perm in permutations(kids):
        leaves = [w for w in perm if t.degree(w) == 1]
        if leaves == sorted(leaves):
            yield perm


def _subtree_leaf_orders(t: Graph, u: int, parent: int | None) -> Iterator[list[int]]:
    kids = sorted(w for w in t.adjacency[u] if w != parent)
    if not kids:
        yield [u]
        return
    for perm in _kid_orders(t, kids):
        yield from _concat_orders(t, perm, u)


def _concat_orders(t: Graph, kids, parent: int) -> Iterator[list[int]]:
    if not kids:
        yield []
        return
    for head in _subtree_leaf_orders(t, kids[0], parent):
        for rest in _concat_orders(t, kids[1:], parent):
            yield head + rest


def dfs_leaf_orders(t: Graph) -> Iterator[list[int]]:
    """Structurally distinct depth-first leaf orders, lazily.

    Roots are taken by decreasing degree then label and visited round-robin,
    one order per root per pass; neighbour orders are lexicographic with
    sibling leaves kept ascending. The first order is ``canonical_leaf_order``.
    """
    if not is_tree(t) or is_path(t):
        raise PreconditionError("leaf orders are defined here for trees that are not paths")
    roots = sorted((v for v in t.vertices if t.degree(v) > 1), key=lambda v: (-t.degree(v), v))
    gens = [_subtree_leaf_orders(t, root, None) for root in roots]
    seen = set()
    while gens:
        alive = []
        for g in gens:
            order = next(g, None)
            if order is None:
                continue
            alive.append(g)
            key = tuple(order)
            if key not in seen and key[::-1] not in seen:
                seen.add(key)
                yield order
        gens = alive


def chain_edges(leaves) -> AugmentationSet:
    return AugmentationSet.of(zip(leaves, leaves[1:]), tag="leaf-chain")


def leaf_chain_edges(t: Graph) -> AugmentationSet:
    if not is_tree(t) or is_path(t):
        raise PreconditionError("leaf chaining expects a tree that is not a path")
    return chain_edges(canonical_leaf_order(t))


def tree_path(t: Graph, a: int, b: int) -> tuple[int, ...]:
    parent = {a: a}
    queue = deque([a])
    while queue:
        u = queue.popleft()
        if u == b:
            break
        for w in sorted(t.adjacency[u]):
            if w not in parent:
                parent[w] = u
                queue.append(w)
    path = [b]
    while path[-1] != a:
        path.append(parent[path[-1]])
    return tuple(reversed(path))


def _chain_leaves(chain: AugmentationSet) -> list[int]:
    edges = list(chain.edges)
    if len(edges) < 2:
        raise InconsistencyError("a leaf chain of a non-path tree has at least two edges")
    first, second = set(edges[0]), set(edges[1])
    start = first - second
    if len(start) != 1:
        raise InconsistencyError("consecutive chain edges must share exactly one leaf")
    leaves = [start.pop()]
    for u, v in edges:
        if leaves[-1] == u:
            leaves.append(v)
        elif leaves[-1] == v:
            leaves.append(u)
        else:
            raise InconsistencyError(f"chain edge {(u, v)} does not continue from leaf {leaves[-1]}")
    if len(set(leaves)) != len(leaves):
        raise InconsistencyError("chain revisits a leaf")
    return leaves


def _sigma_labels(host: Graph, cycle_sets) -> tuple[frozenset[int], ...]:
    found: list[frozenset[int]] = []
    seen = set()
    for k in range(len(cycle_sets) - 1):
        c, c2 = cycle_sets[k], cycle_sets[k + 1]
        for x, y in product(sorted(c), sorted(c2)):
            if x == y:
                continue
            label = frozenset((x, y))
            if label in seen:
                continue
            comps = host.components(label)
            if len(comps) < 2:
                continue
            where = {v: i for i, comp in enumerate(comps) for v in comp}
            if len({where[v] for v in (c | c2) - label}) > 1:
                seen.add(label)
                found.append(label)
    return tuple(found)


def _attach(tree: Graph, cycle_sets, vertices) -> tuple[tuple[int, ...], ...]:
    groups: list[list[int]] = [[] for _ in cycle_sets]
    for v in sorted(vertices):
        home = next((k for k, cs in enumerate(cycle_sets) if v in cs), None)
        if home is None:
            home = _nearest_cycle(tree, cycle_sets, v)
        groups[home].append(v)
    return tuple(tuple(g) for g in groups)


def _nearest_cycle(tree: Graph, cycle_sets, v: int) -> int:
    dist = {v: 0}
    frontier = [v]
    while frontier:
        hits = [k for k, cs in enumerate(cycle_sets) if cs.intersection(frontier)]
        if hits:
            return min(hits)
        nxt = []
        for u in frontier:
            for w in tree.adjacency[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    nxt.append(w)
        frontier = nxt
    raise InconsistencyError(f"vertex {v} is not connected to any fundamental cycle")


def build_c2_block_tree(h: Graph, chain: AugmentationSet) -> BlockTree:
    for e in chain:
        if e not in h.edges:
            raise InconsistencyError(f"chain edge {e} missing from the working graph")
    tree = h.remove_edges(chain.edges)
    if not is_tree(tree):
        raise InconsistencyError("removing the chain edges does not leave a tree")
    leaves = _chain_leaves(chain)
    tree_leaves = {v for v in tree.vertices if tree.degree(v) == 1}
    if set(leaves) != tree_leaves:
        raise InconsistencyError("chain does not visit exactly the leaves of the tree")
    cycles = tuple(tree_path(tree, a, b) for a, b in zip(leaves, leaves[1:]))
    cycle_sets = tuple(frozenset(c) for c in cycles)
    sigmas = _sigma_labels(h, cycle_sets)
    alpha = _attach(tree, cycle_sets, (v for v in h.vertices if h.degree(v) == 2))
    return BlockTree(2, tree, tuple(leaves), cycles, sigmas, alpha, h)


def advance_block_tree(bt: BlockTree, h: Graph) -> BlockTree:
    """Same skeleton, alpha nodes recomputed as the degree-(i+1) vertices of ``h``."""
    i = bt.round + 1
    alpha = _attach(bt.tree, bt.cycle_sets, (v for v in h.vertices if h.degree(v) == i))
    return replace(bt, round=i, alpha=alpha, host=h)
