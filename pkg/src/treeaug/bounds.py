"""Degree-deficiency lower bound on the size of an r-connectivity augmentation of a tree."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidTargetError, PreconditionError
from .graph import Graph, degree_histogram, is_tree


@dataclass(frozen=True)
class BoundResult:
    bound: int
    deficiency_sum: int


def check_target(n: int, r: int) -> None:
    if r < 2:
        raise InvalidTargetError(f"target connectivity must be at least 2, got {r}")
    if r >= n:
        raise InvalidTargetError(f"target connectivity r={r} needs more than {r} vertices, graph has {n}")


def augmentation_lower_bound(t: Graph, r: int) -> BoundResult:
    """ceil(1/2 * sum_{i<r} (r - i) * l_i), l_i = number of degree-i vertices.

    Every vertex of an r-connected graph has degree at least r and each new
    edge raises two degrees by one.
    """
    if not is_tree(t):
        raise PreconditionError("lower bound is defined for trees only")
    check_target(t.n, r)
    deficiency = sum((r - d) * count for d, count in degree_histogram(t).items() if d < r)
    return BoundResult(bound=-(-deficiency // 2), deficiency_sum=deficiency)
