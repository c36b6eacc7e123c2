"""Minimum r-connectivity augmentation of a path.

The path is closed into a cycle, odd targets receive near-diameter chords,
and then circulant rounds join every vertex to the one j steps ahead for
j = 2..floor(r/2). The result is the Harary graph H_{r,n} in path order.
"""

from __future__ import annotations

from dataclasses import dataclass

from .augset import AugmentationSet
from .bounds import check_target
from .errors import PreconditionError
from .graph import Graph, is_path
from .harary import wrap


@dataclass(frozen=True)
class PathOrder:
    sequence: tuple[int, ...]

    def position(self) -> dict[int, int]:
        """Vertex label -> 1-based position along the path."""
        return {v: i for i, v in enumerate(self.sequence, 1)}


def path_order(t: Graph) -> PathOrder:
    """Walk the path starting from the smaller-labelled endpoint."""
    if t.n < 2 or not is_path(t):
        raise PreconditionError("path_order expects a path on at least two vertices")
    start = min(v for v in t.vertices if t.degree(v) == 1)
    seq = [start]
    prev = None
    while len(seq) < t.n:
        cur = seq[-1]
        nxt = next(w for w in sorted(t.adjacency[cur]) if w != prev)
        prev = cur
        seq.append(nxt)
    return PathOrder(tuple(seq))


def path_augmentation(t: Graph, r: int) -> tuple[Graph, AugmentationSet]:
    if not is_path(t):
        raise PreconditionError("path_augmentation expects a path")
    check_target(t.n, r)
    n = t.n
    v = (None,) + path_order(t).sequence  # 1-based
    eca = AugmentationSet()
    present = set(t.edges)

    def add(i: int, k: int, tag: str) -> None:
        a, b = v[i], v[k]
        e = (min(a, b), max(a, b))
        if e not in present:
            present.add(e)
            eca.add(a, b, tag)

    add(1, n, "cycle-closure")
    if r % 2:
        for i in range(1, -(-n // 2) + 1):
            add(i, n // 2 + i, "diameter")
    for j in range(2, r // 2 + 1):
        for i in range(1, n + 1):
            add(i, wrap(i + j, n), f"circulant-round-{j}")
    return t.add_edges(eca.edges), eca
