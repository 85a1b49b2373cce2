"""Brute-force pretropism enumeration over all tuples of edges.

Kept independent of the engine: no skeleton walk, no pruning, and its own
face test. Only the cone primitives are shared.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Sequence

from .cone import Cone, DimensionMismatchError, intersect, is_trivial
from .linalg import IntVector, affine_rank, dot
from .polytope import Polytope

DEFAULT_CAP = 10**7


class OracleTooLargeError(RuntimeError):
    def __init__(self, size: int, cap: int):
        super().__init__(f"OracleTooLarge: {size} edge tuples exceeds cap {cap}")
        self.size = size
        self.cap = cap


@dataclass
class OracleResult:
    rays: list[IntVector]
    cones: list[Cone]
    tuples_examined: int
    intersections: int = 0


def _selects_edge_or_more(p: Polytope, r: Sequence[int]) -> bool:
    vals = [dot(v, r) for v in p.vertices]
    m = min(vals)
    return affine_rank([v for v, x in zip(p.vertices, vals) if x == m]) >= 1


def brute_force_pretropisms(polytopes: Sequence[Polytope], cap: int = DEFAULT_CAP) -> OracleResult:
    if len(polytopes) < 2:
        raise ValueError("at least two polytopes are required")
    dim = polytopes[0].ambient_dim
    if any(p.ambient_dim != dim for p in polytopes):
        raise DimensionMismatchError("polytopes live in different ambient dimensions")
    size = prod(len(p.edges) for p in polytopes)
    if size > cap:
        raise OracleTooLargeError(size, cap)

    leaves: dict = {}
    count = 0

    def descend(i: int, acc: Cone) -> None:
        nonlocal count
        if i == len(polytopes):
            leaves.setdefault(acc.key, acc)
            return
        for e in polytopes[i].edges:
            count += 1
            nxt = intersect(acc, e.normal_cone)
            # any deeper intersection of the zero cone stays zero
            if not is_trivial(nxt):
                descend(i + 1, nxt)

    for e in polytopes[0].edges:
        descend(1, e.normal_cone)

    cones = [leaves[k] for k in sorted(leaves)]
    rays = set()
    for c in cones:
        for r in c.generating_rays():
            if all(_selects_edge_or_more(p, r) for p in polytopes):
                rays.add(r)
    return OracleResult(sorted(rays), cones, size, count)
