"""Undirected simple graphs on vertices 1..n and vertex-connectivity queries.

Connectivity is computed with unit-capacity max-flow on the vertex-split
digraph (each vertex becomes an in/out pair joined by a capacity-one arc),
which by Menger's theorem equals the number of internally vertex-disjoint
paths between two non-adjacent vertices.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

from .errors import GraphFormatError, InvalidVertexError, NoSeparatorError, PreconditionError

Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph with vertex set ``1..n``.

    ``edges`` holds normalized pairs ``(u, v)`` with ``u < v``.
    """

    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise GraphFormatError(f"vertex count must be positive, got {self.n}")
        for u, v in self.edges:
            if not (1 <= u < v <= self.n):
                raise GraphFormatError(f"edge ({u}, {v}) is not a normalized pair in 1..{self.n}")

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph, rejecting self-loops, out-of-range labels and duplicates."""
        seen: set[Edge] = set()
        for u, v in pairs:
            u, v = int(u), int(v)
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            for x in (u, v):
                if not 1 <= x <= n:
                    raise GraphFormatError(f"vertex {x} outside 1..{n}")
            e = norm_edge(u, v)
            if e in seen:
                raise GraphFormatError(f"duplicate edge {e}")
            seen.add(e)
        return cls(n, frozenset(seen))

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls.from_edges(n, ((i, i + 1) for i in range(1, n)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        return cls.from_edges(n, [(i, i + 1) for i in range(1, n)] + [(n, 1)])

    @classmethod
    def star(cls, leaves: int) -> Graph:
        """K_{1,leaves} with centre 1."""
        return cls.from_edges(leaves + 1, ((1, i) for i in range(2, leaves + 2)))

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls.from_edges(n, ((u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)))

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(nb) for v, nb in adj.items()}

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def m(self) -> int:
        return len(self.edges)

    def check_vertex(self, v: int) -> None:
        if not 1 <= v <= self.n:
            raise InvalidVertexError(f"vertex {v} outside 1..{self.n}")

    def neighbors(self, v: int) -> frozenset[int]:
        self.check_vertex(v)
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        return norm_edge(u, v) in self.edges

    def min_degree(self) -> int:
        return min(len(nb) for nb in self.adjacency.values())

    def max_degree(self) -> int:
        return max(len(nb) for nb in self.adjacency.values())

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def add_edges(self, pairs: Iterable[tuple[int, int]]) -> Graph:
        """Return a new graph with ``pairs`` added; existing edges are an error."""
        new = set(self.edges)
        for u, v in pairs:
            if u == v:
                raise GraphFormatError(f"self-loop at vertex {u}")
            e = norm_edge(u, v)
            if e in new:
                raise GraphFormatError(f"edge {e} already present")
            new.add(e)
        return Graph(self.n, frozenset(new))

    def remove_edges(self, pairs: Iterable[tuple[int, int]]) -> Graph:
        drop = {norm_edge(u, v) for u, v in pairs}
        return Graph(self.n, self.edges - drop)

    def relabel(self, mapping: dict[int, int]) -> Graph:
        """Apply a bijection of 1..n to the vertex labels."""
        return Graph.from_edges(self.n, ((mapping[u], mapping[v]) for u, v in self.edges))

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def components(self, removed: Iterable[int] = ()) -> list[set[int]]:
        """Connected components of the graph after deleting ``removed``."""
        gone = set(removed)
        seen = set(gone)
        comps = []
        for s in self.vertices:
            if s in seen:
                continue
            comp = {s}
            seen.add(s)
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self.adjacency[u]:
                    if w not in seen:
                        seen.add(w)
                        comp.add(w)
                        queue.append(w)
            comps.append(comp)
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.sorted_edges())


@dataclass(frozen=True)
class SeparatorWitness:
    """A vertex set whose removal disconnects the graph.

    For complete graphs no separator exists; the witness is then empty
    and ``complete`` is set.
    """

    vertices: frozenset[int]
    complete: bool = False

    @property
    def size(self) -> int:
        return len(self.vertices)

    def separates(self, g: Graph) -> bool:
        return len(g.components(self.vertices)) >= 2


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def degree_histogram(g: Graph) -> dict[int, int]:
    """Map each occurring degree to the number of vertices having it."""
    return dict(sorted(Counter(len(nb) for nb in g.adjacency.values()).items()))


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and g.is_connected()


def is_path(g: Graph) -> bool:
    if not is_tree(g):
        raise PreconditionError("is_path expects a tree")
    return g.n == 1 or g.max_degree() <= 2


def local_vertex_cut(g: Graph, s: int, t: int, cap_at: int | None = None) -> tuple[int, frozenset[int]]:
    """Minimum s-t vertex cut for non-adjacent ``s`` and ``t``.

    Returns the number of internally vertex-disjoint s-t paths and a cut of
    that size. Node ``2v`` is the in-copy of ``v`` and ``2v + 1`` its out-copy.
    With ``cap_at`` the search stops once that many paths are found; the
    returned cut is then meaningless.
    """
    if s == t or g.has_edge(s, t):
        raise PreconditionError("local_vertex_cut needs two distinct non-adjacent vertices")
    big = g.n + 1
    cap: dict[int, dict[int, int]] = {x: {} for x in range(2, 2 * g.n + 2)}

    def arc(a: int, b: int, c: int) -> None:
        cap[a][b] = cap[a].get(b, 0) + c
        cap[b].setdefault(a, 0)

    for v in g.vertices:
        arc(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for u, v in g.edges:
        arc(2 * u + 1, 2 * v, big)
        arc(2 * v + 1, 2 * u, big)

    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        parent = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b, c in cap[a].items():
                if c > 0 and b not in parent:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            break
        b = sink
        while b != source:
            a = parent[b]
            cap[a][b] -= 1
            cap[b][a] += 1
            b = a
        flow += 1
        if cap_at is not None and flow >= cap_at:
            return flow, frozenset()

    reach = parent.keys()
    cut = frozenset(v for v in g.vertices if 2 * v in reach and 2 * v + 1 not in reach)
    return flow, cut


def vertex_connectivity(g: Graph) -> tuple[int, SeparatorWitness]:
    """Exact vertex connectivity together with a minimum separator.

    Disconnected graphs give 0 with an empty witness; complete graphs give
    ``n - 1`` with an empty witness flagged ``complete``.
    """
    if not g.is_connected():
        return 0, SeparatorWitness(frozenset())
    if g.is_complete():
        return g.n - 1, SeparatorWitness(frozenset(), complete=True)
    best = g.min_degree()
    best_cut: frozenset[int] | None = None
    # Some vertex among any best+1 vertices lies outside a minimum separator.
    sources = list(g.vertices)
    i = 0
    while i < len(sources) and i <= best:
        s = sources[i]
        for t in g.vertices:
            if t == s or g.has_edge(s, t):
                continue
            k, cut = local_vertex_cut(g, s, t)
            if k < best or best_cut is None and k == best:
                best, best_cut = k, cut
        i += 1
    if best_cut is None:
        # δ(g) is attained by a neighbourhood; a min-degree vertex's neighbours separate it.
        v = min(g.vertices, key=lambda x: (g.degree(x), x))
        best_cut = g.adjacency[v]
    return best, SeparatorWitness(best_cut)


def is_k_connected(g: Graph, k: int) -> bool:
    """True iff removing any k-1 vertices leaves g connected (and n > k)."""
    if g.n <= k:
        return g.is_complete() and g.n - 1 >= k
    if g.min_degree() < k or not g.is_connected():
        return False
    for s in range(1, k + 1):
        for t in g.vertices:
            if t != s and not g.has_edge(s, t) and local_vertex_cut(g, s, t, cap_at=k)[0] < k:
                return False
    return True


def min_vertex_separator(g: Graph) -> SeparatorWitness:
    if not g.is_connected():
        raise PreconditionError("min_vertex_separator expects a connected graph")
    if g.is_complete():
        raise NoSeparatorError("complete graphs have no vertex separator")
    return vertex_connectivity(g)[1]


def parse_edge_list(text: str) -> Graph:
    """Parse the ``n m`` header plus ``u v`` lines format (1-based labels).

    Blank lines and ``#`` comments (full-line or trailing) are ignored.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            rows.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise GraphFormatError(f"line {lineno}: expected two integers, got {raw!r}") from None
    if not rows:
        raise GraphFormatError("missing 'n m' header")
    (n, m), body = rows[0], rows[1:]
    if len(body) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(body)}")
    return Graph.from_edges(n, body)


def format_edge_list(n: int, edges: Iterable[tuple[int, int]], comments: Iterable[str | None] | None = None) -> str:
    edges = list(edges)
    notes = list(comments) if comments is not None else [None] * len(edges)
    lines = [f"{n} {len(edges)}"]
    for (u, v), note in zip(edges, notes):
        lines.append(f"{u} {v}" + (f"  # {note}" if note else ""))
    return "\n".join(lines) + "\n"
