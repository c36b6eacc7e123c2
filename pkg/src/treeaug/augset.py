from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .errors import GraphFormatError
from .graph import Edge, norm_edge


@dataclass
class AugmentationSet:
    """Edges added to a graph, in the order they were added, with a provenance tag each."""

    edges: list[Edge] = field(default_factory=list)
    round_tags: list[str] = field(default_factory=list)

    def add(self, u: int, v: int, tag: str) -> None:
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}")
        e = norm_edge(u, v)
        if e in self.edges:
            raise GraphFormatError(f"edge {e} already in augmentation set")
        self.edges.append(e)
        self.round_tags.append(tag)

    def extend(self, other: AugmentationSet) -> None:
        for e, tag in other.items():
            self.add(*e, tag)

    def items(self) -> Iterator[tuple[Edge, str]]:
        return iter(zip(self.edges, self.round_tags))

    def copy(self) -> AugmentationSet:
        return AugmentationSet(list(self.edges), list(self.round_tags))

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.edges)

    def __contains__(self, pair) -> bool:
        return norm_edge(*pair) in self.edges

    @classmethod
    def of(cls, pairs, tag: str = "given") -> AugmentationSet:
        out = cls()
        for u, v in pairs:
            out.add(u, v, tag)
        return out
