"""Independent checks for augmentation sets: exact verification and exhaustive minimum search."""

from __future__ import annotations

import heapq
from dataclasses import dataclass, replace
from itertools import combinations

import numpy as np

from .augset import AugmentationSet
from .bounds import augmentation_lower_bound, check_target
from .errors import BudgetExceededError, InvalidCandidateError, OracleLimitError, PreconditionError
from .graph import Graph, SeparatorWitness, is_k_connected, is_tree, norm_edge, vertex_connectivity

PROVEN_OPTIMAL = "proven-optimal"
MATCHES_LOWER_BOUND = "matches-lower-bound"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class OracleLimits:
    max_n: int = 8
    max_r: int = 4
    max_subsets: int = 10**7


@dataclass(frozen=True)
class AugmentationReport:
    n: int
    r: int
    input_edge_count: int
    lower_bound: int
    eca_size: int
    achieved_kappa: int
    optimal: str
    witness: SeparatorWitness | None = None

    @property
    def ok(self) -> bool:
        return self.achieved_kappa >= self.r


def _checked_edges(t: Graph, eca) -> list[tuple[int, int]]:
    out, seen = [], set()
    for u, v in eca:
        if u == v:
            raise InvalidCandidateError(f"self-loop at vertex {u}")
        t.check_vertex(u)
        t.check_vertex(v)
        e = norm_edge(u, v)
        if e in t.edges:
            raise InvalidCandidateError(f"edge {e} already present in the input graph")
        if e in seen:
            raise InvalidCandidateError(f"edge {e} listed twice")
        seen.add(e)
        out.append(e)
    return out


def verify_augmentation(t: Graph, eca, r: int) -> AugmentationReport:
    """Add ``eca`` to the tree ``t`` and report exact connectivity against the target ``r``.

    ``optimal`` is ``matches-lower-bound`` when the set is as small as the
    degree bound allows, otherwise ``unknown``; only the exhaustive oracle can
    upgrade it to ``proven-optimal`` (see ``with_oracle_verdict``).
    """
    edges = _checked_edges(t, eca)
    bound = augmentation_lower_bound(t, r).bound
    h = t.add_edges(edges)
    kappa, witness = vertex_connectivity(h)
    return AugmentationReport(
        n=t.n,
        r=r,
        input_edge_count=t.m,
        lower_bound=bound,
        eca_size=len(edges),
        achieved_kappa=kappa,
        optimal=MATCHES_LOWER_BOUND if len(edges) == bound else UNKNOWN,
        witness=None if kappa >= r else witness,
    )


def with_oracle_verdict(report: AugmentationReport, oracle_size: int) -> AugmentationReport:
    if report.ok and report.eca_size == oracle_size:
        return replace(report, optimal=PROVEN_OPTIMAL)
    return replace(report, optimal=UNKNOWN)


def _non_edges(t: Graph) -> list[tuple[int, int]]:
    return [(u, v) for u in t.vertices for v in range(u + 1, t.n + 1) if not t.has_edge(u, v)]


class _Counter:
    def __init__(self, cap: int):
        self.cap = cap
        self.used = 0


def _search_size(t: Graph, r: int, k: int, cands, counter: _Counter, prune: bool):
    """Lexicographically first k-subset of ``cands`` making t r-connected, or None."""
    if not prune:
        for combo in combinations(cands, k):
            counter.used += 1
            if counter.used > counter.cap:
                return _Exceeded
            if is_k_connected(t.add_edges(combo), r):
                return list(combo)
        return None

    deficit = {v: max(0, r - t.degree(v)) for v in t.vertices}
    need = sum(deficit.values())
    chosen: list[tuple[int, int]] = []

    def rec(start: int):
        nonlocal need
        left = k - len(chosen)
        if need > 2 * left:
            return None
        if left == 0:
            counter.used += 1
            if counter.used > counter.cap:
                return _Exceeded
            return list(chosen) if is_k_connected(t.add_edges(chosen), r) else None
        for i in range(start, len(cands) - left + 1):
            u, v = cands[i]
            gain = (deficit[u] > 0) + (deficit[v] > 0)
            deficit[u] -= 1
            deficit[v] -= 1
            need -= gain
            chosen.append((u, v))
            found = rec(i + 1)
            chosen.pop()
            need += gain
            deficit[u] += 1
            deficit[v] += 1
            if found is not None:
                return found
        return None

    return rec(0)


_Exceeded = object()


def brute_force_min_augmentation(
    t: Graph, r: int, budget: OracleLimits = OracleLimits()
) -> tuple[int, AugmentationSet]:
    """Smallest augmentation of the tree ``t`` to connectivity ``r``, by exhaustive search.

    Sizes are tried upward from the degree lower bound; within a size,
    subsets of non-edges are enumerated in lexicographic order and pruned
    when the remaining edges cannot lift every vertex to degree ``r``.
    """
    if not is_tree(t):
        raise PreconditionError("the oracle expects a tree")
    check_target(t.n, r)
    if t.n > budget.max_n or r > budget.max_r:
        raise OracleLimitError(
            f"instance n={t.n}, r={r} exceeds oracle caps n<={budget.max_n}, r<={budget.max_r}"
        )
    cands = _non_edges(t)
    counter = _Counter(budget.max_subsets)
    start = augmentation_lower_bound(t, r).bound
    for k in range(start, len(cands) + 1):
        found = _search_size(t, r, k, cands, counter, prune=True)
        if found is _Exceeded:
            raise BudgetExceededError(
                f"subset budget {budget.max_subsets} exhausted while searching size {k}",
                searched_up_to=k - 1,
            )
        if found is not None:
            return k, AugmentationSet.of(found, tag="oracle")
    raise PreconditionError(f"no augmentation reaches r={r}; complete graph on {t.n} vertices is too small")


def exists_augmentation_of_size(t: Graph, r: int, k: int, max_subsets: int = 10**7) -> bool:
    """Plain exhaustive check, without degree pruning, for an r-connecting k-subset of non-edges."""
    if k < 0:
        return False
    found = _search_size(t, r, k, _non_edges(t), _Counter(max_subsets), prune=False)
    if found is _Exceeded:
        raise BudgetExceededError(f"subset budget {max_subsets} exhausted at size {k}", searched_up_to=k - 1)
    return found is not None


def prufer_decode(seq, n: int) -> Graph:
    """Labelled tree on 1..n encoded by a sequence of n-2 labels."""
    seq = [int(x) for x in seq]
    if n < 2 or len(seq) != n - 2 or any(not 1 <= x <= n for x in seq):
        raise PreconditionError(f"not a Pruefer sequence for n={n}: {seq}")
    remaining = [0] * (n + 1)
    for x in seq:
        remaining[x] += 1
    leaves = [v for v in range(1, n + 1) if remaining[v] == 0]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        remaining[x] -= 1
        if remaining[x] == 0:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph.from_edges(n, edges)


def random_tree(n: int, seed: int) -> Graph:
    """Uniform random labelled tree on 1..n, fixed by ``seed``."""
    if n < 2:
        raise PreconditionError(f"random_tree needs n >= 2, got {n}")
    rng = np.random.default_rng(seed)
    return prufer_decode(rng.integers(1, n + 1, size=n - 2), n)
