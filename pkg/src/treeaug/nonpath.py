"""Minimum r-connectivity augmentation of a tree that is not a path.

After chaining the leaves, round j (j = 2..r-1) raises every degree-j
vertex to degree j+1. The degree-j vertices are the alpha nodes of the
(C,j)-block tree; each step joins two of them (or, for a lone leftover,
joins it to a degree-(j+1) vertex). Steps are chosen either by the main
rule, pairing the two pi nodes with the most alpha nodes, or by one of six
boundary patterns, checked in the order 1, 2, 3, 5, 6, 4.

Every rule leaves some freedom (which alpha of a pi node, which partner at
equal distance). Each rule therefore produces an ordered list of candidate
moves, lowest labels first. ``tie_break="lowest"`` always takes the first
candidate. ``tie_break="search"`` backtracks depth-first through the
candidates of every matching case (which covers every case order) until
each round ends (j+1)-connected, and if the canonical leaf order admits no
such run it retries with other depth-first leaf orders. Only edges some
rule sanctions are ever added.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from itertools import combinations
from typing import Callable, Iterator

from .augset import AugmentationSet
from .blocktree import BlockTree, advance_block_tree, build_c2_block_tree, chain_edges, dfs_leaf_orders, leaf_chain_edges
from .bounds import check_target
from .errors import PatternExhaustedError, PreconditionError, UnsupportedTargetError
from .graph import Graph, is_k_connected, is_path, is_tree

CASE_ORDER = ("BC1", "BC2", "BC3", "BC5", "BC6", "BC4")
TIE_BREAKS = ("lowest", "search")
DEFAULT_SEARCH_BUDGET = 20_000
DEFAULT_LEAF_ORDERS = 32


@dataclass(frozen=True)
class BoundaryCase:
    kind: str | None
    bindings: dict = field(default_factory=dict)


@dataclass(frozen=True)
class RoundState:
    j: int
    h: Graph
    bt: BlockTree
    eca: AugmentationSet

    def describe(self) -> str:
        lines = [f"round j={self.j}, edges added so far: {len(self.eca)}"]
        for k, group in enumerate(self.bt.alpha):
            lines.append(f"  pi{k + 1} {self.bt.cycles[k]}: alpha={list(group)}")
        lines.append("  degrees: " + " ".join(f"{v}:{self.h.degree(v)}" for v in self.h.vertices))
        lines.append(f"  edges added: {self.eca.edges}")
        return "\n".join(lines)


def _free_pairs(h: Graph, xs, ys) -> list[tuple[int, int]]:
    same = xs is ys
    return [(x, y) for x in xs for y in ys if x != y and not (same and y < x) and not h.has_edge(x, y)]


def matching_boundary_cases(bt: BlockTree, h: Graph) -> list[BoundaryCase]:
    """Every boundary pattern the block tree satisfies, in ``CASE_ORDER``.

    Only pi nodes that still carry alpha nodes are considered.
    """
    cons = bt.considered()
    deg = [len(bt.alpha[k]) for k in cons]
    total = sum(deg)
    if total == 0:
        return []
    found: dict[str, BoundaryCase] = {}
    all_one = all(d == 1 for d in deg)
    if total == 1:
        found["BC1"] = BoundaryCase("BC1", {"a": bt.alpha[cons[0]][0], "pi": cons[0]})
    if len(cons) == 4 and all_one:
        a, b, c, d = (bt.alpha[k][0] for k in cons)
        if h.has_edge(b, c) and not h.has_edge(a, c) and not h.has_edge(b, d):
            found["BC2"] = BoundaryCase("BC2", {"a": a, "b": b, "c": c, "d": d, "pis": tuple(cons)})
    if len(cons) == 3 and deg == [1, 2, 1]:
        a = bt.alpha[cons[0]][0]
        b, c = bt.alpha[cons[1]]
        d = bt.alpha[cons[2]][0]
        crossed = not h.has_edge(a, c) and not h.has_edge(b, d)
        parallel = not h.has_edge(a, b) and not h.has_edge(c, d)
        if crossed or parallel:
            found["BC3"] = BoundaryCase("BC3", {"a": a, "b": b, "c": c, "d": d, "pis": tuple(cons)})
    if total > 1 and not any(
        _free_pairs(h, bt.alpha[k1], bt.alpha[k2]) for k1, k2 in combinations(cons, 2)
    ):
        found["BC5"] = BoundaryCase("BC5", {"pis": tuple(cons)})
    big = [k for k, d in zip(cons, deg) if d > 1]
    if len(big) == 1 and len(cons) >= 2:
        found["BC6"] = BoundaryCase("BC6", {"l": big[0], "pis": tuple(cons)})
    if all_one and len(cons) >= 2:
        found["BC4"] = BoundaryCase("BC4", {"pis": tuple(cons)})
    return [found[k] for k in CASE_ORDER if k in found]


def classify_boundary_case(bt: BlockTree, h: Graph) -> BoundaryCase:
    """First matching boundary pattern, or kind ``None`` when the main rule applies."""
    cases = matching_boundary_cases(bt, h)
    return cases[0] if cases else BoundaryCase(None)


def _farthest_first(pis, i: int) -> list[list[int]]:
    """Other pi indices grouped by decreasing chain distance from ``i``."""
    by_dist: dict[int, list[int]] = {}
    for k in pis:
        if k != i:
            by_dist.setdefault(abs(k - i), []).append(k)
    return [sorted(by_dist[d]) for d in sorted(by_dist, reverse=True)]


def _single(pairs, tag: str) -> list[AugmentationSet]:
    return [AugmentationSet.of([p], tag) for p in pairs]


def boundary_moves(bt: BlockTree, case: BoundaryCase, h: Graph) -> list[AugmentationSet]:
    """All moves the boundary handler allows, preferred move first."""
    tag = f"boundary-case-{case.kind[2:]}-round-{bt.round}"
    b = case.bindings
    if case.kind == "BC1":
        a, home = b["a"], b["pi"]
        others = sorted(
            {v for k, cs in enumerate(bt.cycle_sets) if k != home for v in cs} - {a} - h.adjacency[a]
        )
        target = [c for c in others if h.degree(c) == h.degree(a) + 1]
        if not target and others:
            low = min(h.degree(c) for c in others)
            target = [c for c in others if h.degree(c) == low]
        return _single(((a, c) for c in target), tag)
    if case.kind == "BC2":
        return [AugmentationSet.of([(b["a"], b["c"]), (b["b"], b["d"])], tag)]
    if case.kind == "BC3":
        a, bb, c, d = b["a"], b["b"], b["c"], b["d"]
        # Swapping the names of the two middle alpha vertices turns the
        # crossed pairing into the parallel one, so both are offered.
        crossed = [(a, c), (bb, d)]
        parallel = [(a, bb), (c, d)]
        options = [crossed, parallel]
        return [AugmentationSet.of(o, tag) for o in options if not any(h.has_edge(*e) for e in o)]
    if case.kind == "BC4":
        # Greedy reading: the first pi meets the farthest pi it may join, which
        # nests the chords. Bottleneck reading: keep the smallest |i - j| of the
        # whole pairing as large as possible, i.e. pi_i meets pi_{i + s/2}.
        pis = list(b["pis"])
        moves = []
        for i in pis:
            for group in _farthest_first(pis, i):
                pairs = [p for k in group for p in _free_pairs(h, bt.alpha[i], bt.alpha[k])]
                if pairs:
                    moves = _single(pairs, tag)
                    break
            if moves:
                break
        half = (len(pis) + 1) // 2
        for idx in range(len(pis) - half):
            i, k = pis[idx], pis[idx + half]
            for p in _free_pairs(h, bt.alpha[i], bt.alpha[k]):
                if p not in [mv.edges[0] for mv in moves]:
                    moves.append(AugmentationSet.of([p], tag))
        return moves
    if case.kind == "BC5":
        pis = sorted(b["pis"], key=lambda k: (-len(bt.alpha[k]), k))
        return _single((p for k in pis for p in _free_pairs(h, bt.alpha[k], bt.alpha[k])), tag)
    if case.kind == "BC6":
        l = b["l"]
        for group in _farthest_first(b["pis"], l):
            pairs = [p for k in group for p in _free_pairs(h, bt.alpha[l], bt.alpha[k])]
            if pairs:
                return _single(pairs, tag)
        return []
    raise ValueError(f"not a boundary case: {case.kind!r}")


def boundary_augment(bt: BlockTree, case: BoundaryCase, h: Graph) -> AugmentationSet:
    """Edges for one application of the boundary handler ``case`` (preferred move).

    BC4, BC5 and BC6 add a single pair per call; the caller reclassifies
    afterwards, which lets the residue fall through to the other cases.
    """
    moves = boundary_moves(bt, case, h)
    if not moves:
        raise PatternExhaustedError(
            f"round {bt.round}: {case.kind} has no legal non-edge",
            state=RoundState(bt.round, h, bt, AugmentationSet()),
        )
    return moves[0]


def main_moves(bt: BlockTree, h: Graph, j: int) -> list[AugmentationSet]:
    """Pairs between pi_max and pi_smax, degree ties broken towards lower chain index.

    Pi pairs of equal rank are all offered; if none has a free pair the next
    ranks are tried.
    """
    cons = bt.considered()
    ranked = sorted(cons, key=lambda k: (-len(bt.alpha[k]), k))
    tag = f"main-loop-round-{j}"
    tiers: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for k1, k2 in combinations(ranked, 2):
        rank = (len(bt.alpha[k1]), len(bt.alpha[k2]))
        tiers.setdefault(rank, []).append((k1, k2))
    for rank in sorted(tiers, reverse=True):
        pairs = [p for k1, k2 in tiers[rank] for p in _free_pairs(h, bt.alpha[k1], bt.alpha[k2])]
        if pairs:
            return _single(pairs, tag)
    return []


def _apply(state: RoundState, added: AugmentationSet) -> RoundState:
    eca = state.eca.copy()
    eca.extend(added)
    h = state.h.add_edges(added.edges)
    touched = [v for e in added for v in e]
    bt = state.bt.without(*touched).with_host(h)
    return replace(state, h=h, bt=bt, eca=eca)


def main_loop_round(state: RoundState) -> RoundState:
    """One main-rule step: join an alpha of pi_max to a non-adjacent alpha of pi_smax.

    Returns ``state`` unchanged when no two pi nodes share a free pair,
    which is exactly the situation boundary case 5 describes.
    """
    moves = main_moves(state.bt, state.h, state.j)
    return _apply(state, moves[0]) if moves else state


def step_moves(state: RoundState, all_cases: bool = False) -> tuple[BoundaryCase, list[AugmentationSet]]:
    """Case governing the next step and its candidate moves.

    With ``all_cases`` the moves of every matching boundary case are
    offered, first-matching case first, which amounts to trying every
    case order.
    """
    cases = matching_boundary_cases(state.bt, state.h)
    if not cases:
        return BoundaryCase(None), main_moves(state.bt, state.h, state.j)
    if not all_cases:
        return cases[0], boundary_moves(state.bt, cases[0], state.h)
    moves, seen = [], set()
    for case in cases:
        for mv in boundary_moves(state.bt, case, state.h):
            key = frozenset(mv.edges)
            if key not in seen:
                seen.add(key)
                moves.append(mv)
    return cases[0], moves


def augment_round(state: RoundState) -> RoundState:
    """Run round j with the preferred move at every step."""
    while state.bt.alpha_vertices():
        case, moves = step_moves(state)
        if not moves:
            raise PatternExhaustedError(
                f"round {state.j}: {case.kind or 'main loop'} has no legal non-edge", state=state
            )
        state = _apply(state, moves[0])
    return state


class _Budget:
    def __init__(self, nodes: int):
        self.left = nodes
        self.last_failure: RoundState | None = None

    def spend(self) -> bool:
        self.left -= 1
        return self.left >= 0


def _round_completions(state: RoundState, budget: _Budget) -> Iterator[RoundState]:
    """Completions of round j, in candidate order, whose graph is (j+1)-connected."""
    if not state.bt.alpha_vertices():
        if is_k_connected(state.h, state.j + 1):
            yield state
        else:
            budget.last_failure = state
        return
    if not budget.spend():
        return
    _, moves = step_moves(state, all_cases=True)
    if not moves:
        budget.last_failure = state
    for mv in moves:
        yield from _round_completions(_apply(state, mv), budget)


def _search_rounds(state: RoundState, r: int, budget: _Budget, trace) -> Iterator[RoundState]:
    if trace is not None:
        trace(state.bt)
    for done in _round_completions(state, budget):
        if done.j + 1 >= r:
            yield done
            continue
        nxt = replace(done, j=done.j + 1, bt=advance_block_tree(done.bt, done.h))
        yield from _search_rounds(nxt, r, budget, trace)


def search_round(state: RoundState, budget: int = DEFAULT_SEARCH_BUDGET) -> RoundState:
    """First completion of round j (depth-first, candidate order) that is (j+1)-connected."""
    b = _Budget(budget)
    for done in _round_completions(state, b):
        return done
    why = "search budget exhausted" if b.left < 0 else "no completion of the round is (j+1)-connected"
    raise PatternExhaustedError(f"round {state.j}: {why}", state=b.last_failure or state)


def nonpath_augmentation(
    t: Graph,
    r: int,
    trace: Callable[[BlockTree], None] | None = None,
    tie_break: str = "lowest",
    budget: int = DEFAULT_SEARCH_BUDGET,
    leaf_orders: int = DEFAULT_LEAF_ORDERS,
) -> tuple[Graph, AugmentationSet]:
    """Augment a non-path tree to an r-connected graph.

    ``trace``, if given, is called with the (C,j)-block tree at the start
    of every round (in search mode, of every round attempt).

    In search mode the canonical leaf order is tried first with the full
    node ``budget``; if no round sequence works, up to ``leaf_orders`` - 1
    other depth-first leaf orders are tried with a quarter of it each.
    """
    if tie_break not in TIE_BREAKS:
        raise ValueError(f"tie_break must be one of {TIE_BREAKS}, got {tie_break!r}")
    if not is_tree(t) or is_path(t):
        raise PreconditionError("nonpath_augmentation expects a tree that is not a path")
    check_target(t.n, r)
    if r == 2:
        raise UnsupportedTargetError(
            "r = 2 on a non-path tree is biconnectivity augmentation, which the leaf chain over-spends"
        )
    if tie_break == "lowest":
        return _literal(t, r, leaf_chain_edges(t), trace)

    first_failure = None
    exhausted = False
    for k, leaves in enumerate(dfs_leaf_orders(t)):
        if k >= leaf_orders:
            break
        chain = chain_edges(leaves)
        h = t.add_edges(chain.edges)
        state = RoundState(2, h, build_c2_block_tree(h, chain), chain.copy())
        b = _Budget(budget if k == 0 else max(1, budget // 4))
        for done in _search_rounds(state, r, b, trace):
            return done.h, done.eca
        exhausted |= b.left < 0
        if first_failure is None:
            first_failure = b.last_failure or state
    why = "search budget exhausted" if exhausted else "no sequence of rounds reaches the target"
    raise PatternExhaustedError(
        f"r={r}: {why} for any of the first {leaf_orders} leaf orders", state=first_failure
    )


def _literal(t: Graph, r: int, chain: AugmentationSet, trace) -> tuple[Graph, AugmentationSet]:
    h = t.add_edges(chain.edges)
    state = RoundState(2, h, build_c2_block_tree(h, chain), chain.copy())
    for j in range(2, r):
        if j > 2:
            state = replace(state, j=j, bt=advance_block_tree(state.bt, state.h))
        if trace is not None:
            trace(state.bt)
        state = augment_round(state)
    return state.h, state.eca


def tag_round(tag: str) -> int | None:
    """Round number encoded in a provenance tag; None for the leaf chain."""
    head, sep, tail = tag.rpartition("round-")
    return int(tail) if sep and tail.isdigit() else None


def replay_block_trees(t: Graph, eca: AugmentationSet) -> list[BlockTree]:
    """The (C,j)-block tree at the start of every round of a finished run."""
    chain = AugmentationSet.of((e for e, tag in eca.items() if tag == "leaf-chain"), tag="leaf-chain")
    h = t.add_edges(chain.edges)
    bt = build_c2_block_tree(h, chain)
    last = max((j for j in map(tag_round, eca.round_tags) if j is not None), default=2)
    out = [bt]
    for j in range(2, last):
        h = h.add_edges(e for e, tag in eca.items() if tag_round(tag) == j)
        bt = advance_block_tree(bt, h)
        out.append(bt)
    return out
