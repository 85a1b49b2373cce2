"""Newton polytopes and their edge skeletons.

Facets are found by exhaustive enumeration: every affinely independent
subset of the support that spans a hyperplane of the affine hull is tested
for one-sidedness. Supports of benchmark systems are small, so this is
cheap and entirely exact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .cone import Cone, cone_from_halfspaces
from .linalg import (
    IntVector,
    ZeroVectorError,
    affine_rank,
    dot,
    nullspace_basis,
    rank,
)


class EmptySupportError(ValueError):
    def __init__(self, message: str = "EmptySupport"):
        super().__init__(message)


@dataclass(frozen=True)
class Support:
    """Exponent vectors of the monomials of one polynomial."""

    points: tuple[IntVector, ...]
    ambient_dim: int

    @classmethod
    def from_points(cls, points: Iterable[Sequence[int]], ambient_dim: int | None = None) -> "Support":
        pts = sorted({tuple(int(x) for x in p) for p in points})
        if ambient_dim is None:
            if not pts:
                raise EmptySupportError()
            ambient_dim = len(pts[0])
        for p in pts:
            if len(p) != ambient_dim:
                raise ValueError(f"point {p} is not in dimension {ambient_dim}")
        return cls(tuple(pts), ambient_dim)

    def to_json(self) -> dict:
        return {"ambient_dim": self.ambient_dim, "points": [list(p) for p in self.points]}

    @classmethod
    def from_json(cls, doc: dict) -> "Support":
        return cls.from_points(doc["points"], doc["ambient_dim"])


def load_supports(path: str) -> list[Support]:
    """Read one Support document, or a document with a ``supports`` array."""
    with open(path) as fh:
        doc = json.load(fh)
    if "supports" in doc:
        return [Support.from_json(d) for d in doc["supports"]]
    return [Support.from_json(doc)]


@dataclass(frozen=True)
class Edge:
    id: int
    endpoints: tuple[int, int]
    neighbor_edge_ids: frozenset[int]
    normal_cone: Cone


@dataclass(frozen=True)
class FaceDescriptor:
    vertices: frozenset[int]
    dim: int


@dataclass(frozen=True)
class Polytope:
    ambient_dim: int
    vertices: tuple[IntVector, ...]
    affine_hull_equalities: tuple[tuple[IntVector, Fraction], ...]
    facets: tuple[tuple[IntVector, Fraction], ...]
    edges: tuple[Edge, ...]
    dim: int

    def vertex_edges(self) -> list[list[int]]:
        """Edge ids incident to each vertex."""
        out: list[list[int]] = [[] for _ in self.vertices]
        for e in self.edges:
            for v in e.endpoints:
                out[v].append(e.id)
        return out


def _facets(points: list[IntVector], hull_normals: list[IntVector], dim: int):
    """Facet inner normals and support values of ``conv(points)``."""
    if dim == 0:
        return []
    found: dict[IntVector, int] = {}
    for subset in combinations(range(len(points)), dim):
        base = points[subset[0]]
        diffs = [tuple(a - b for a, b in zip(points[i], base)) for i in subset[1:]]
        ns = nullspace_basis(diffs + hull_normals, len(base))
        if len(ns) != 1:
            continue
        h = ns[0]
        c = dot(h, base)
        vals = [dot(h, p) - c for p in points]
        if all(v <= 0 for v in vals):
            h, c = tuple(-x for x in h), -c
        elif not all(v >= 0 for v in vals):
            continue
        found[h] = c
    return sorted(found.items())


def build_polytope(support: Support | Iterable[Sequence[int]]) -> Polytope:
    """Vertices, facets and edge skeleton of the convex hull of a support."""
    if not isinstance(support, Support):
        pts = list(support)
        if not pts:
            raise EmptySupportError()
        support = Support.from_points(pts)
    points = list(support.points)
    if not points:
        raise EmptySupportError()
    d = support.ambient_dim
    base = points[0]
    diffs = [tuple(a - b for a, b in zip(p, base)) for p in points[1:]]
    hull_normals = nullspace_basis(diffs, d) if diffs else nullspace_basis([], d)
    dim = d - len(hull_normals)
    facets = _facets(points, hull_normals, dim)

    def tight(p):
        return [h for h, c in facets if dot(h, p) == c]

    if dim == 0:
        vertices = points[:1]
    else:
        vertices = [p for p in points if rank(tight(p) + hull_normals) == d]
    vertices.sort()
    incidence = [frozenset(i for i, (h, c) in enumerate(facets) if dot(h, v) == c) for v in vertices]

    pairs = []
    for u, v in combinations(range(len(vertices)), 2):
        common = incidence[u] & incidence[v]
        if rank([facets[i][0] for i in common] + hull_normals) == d - 1:
            pairs.append((u, v))
    pairs.sort()

    by_vertex: dict[int, list[int]] = {}
    for k, (u, v) in enumerate(pairs):
        by_vertex.setdefault(u, []).append(k)
        by_vertex.setdefault(v, []).append(k)
    edges = []
    for k, (u, v) in enumerate(pairs):
        nbrs = frozenset(by_vertex[u] + by_vertex[v]) - {k}
        edges.append(Edge(k, (u, v), nbrs, _edge_normal_cone(vertices, u, v)))

    hull = tuple((n, Fraction(dot(n, base))) for n in hull_normals)
    return Polytope(d, tuple(vertices), hull,
                    tuple((h, Fraction(c)) for h, c in facets), tuple(edges), dim)


def _edge_normal_cone(vertices: list[IntVector], u: int, v: int) -> Cone:
    # inner normals r whose minimum over the vertices is attained at both ends
    a, b = vertices[u], vertices[v]
    direction = tuple(x - y for x, y in zip(b, a))
    halfspaces = [tuple(x - y for x, y in zip(w, a)) for k, w in enumerate(vertices) if k not in (u, v)]
    return cone_from_halfspaces(len(a), halfspaces, [direction])


def support_face(p: Polytope, r: Sequence[int]) -> FaceDescriptor:
    """Vertices minimizing ``<., r>`` and the dimension of their hull."""
    if not any(r):
        raise ZeroVectorError()
    vals = [dot(v, r) for v in p.vertices]
    m = min(vals)
    idx = [i for i, x in enumerate(vals) if x == m]
    return FaceDescriptor(frozenset(idx), affine_rank([p.vertices[i] for i in idx]))


def edges_touching_face(p: Polytope, f: FaceDescriptor) -> set[int]:
    return {e.id for e in p.edges if e.endpoints[0] in f.vertices or e.endpoints[1] in f.vertices}
