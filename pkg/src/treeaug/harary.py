"""Harary graphs H_{r,n}: the sparsest r-connected graphs on n vertices."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidSpecError
from .graph import Graph


@dataclass(frozen=True)
class HararySpec:
    r: int
    n: int

    def __post_init__(self) -> None:
        if self.r < 2:
            raise InvalidSpecError(f"Harary graphs need r >= 2, got r={self.r}")
        if self.r >= self.n:
            raise InvalidSpecError(f"Harary graphs need r < n, got r={self.r}, n={self.n}")


def wrap(i: int, n: int) -> int:
    """1-based circular index: residue 0 maps to n."""
    return (i - 1) % n + 1


def harary_graph(spec: HararySpec) -> Graph:
    """Vertices 1..n around a circle.

    Even r: join each vertex to the r/2 nearest on either side. Odd r adds
    diameters to H_{r-1,n}: ``{i, i + n/2}`` when n is even, and
    ``{i, i + (n-1)/2}`` for ``1 <= i <= (n+1)/2`` when n is odd.
    """
    r, n = spec.r, spec.n
    pairs = set()
    for i in range(1, n + 1):
        for d in range(1, r // 2 + 1):
            j = wrap(i + d, n)
            pairs.add((min(i, j), max(i, j)))
    if r % 2:
        if n % 2 == 0:
            for i in range(1, n // 2 + 1):
                pairs.add((i, i + n // 2))
        else:
            for i in range(1, (n + 1) // 2 + 1):
                pairs.add((i, i + (n - 1) // 2))
    return Graph(n, frozenset(pairs))


def is_harary(g: Graph, spec: HararySpec) -> bool:
    """Edge-set equality with ``harary_graph(spec)`` under the identity labeling."""
    return g.n == spec.n and g.edges == harary_graph(spec).edges
