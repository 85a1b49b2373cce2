"""Pretropism search over the edge skeletons of a tuple of polytopes.

The driver walks the tree of cone intersections level by level. Each level
fans the surviving cones out over the edges of the next polytope through an
edge-skeleton walk, then (in horizontal mode) drops duplicate and dominated
cones before descending.
"""

from __future__ import annotations

import logging
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

from .cone import (
    Cone,
    DimensionMismatchError,
    EmptyConeError,
    cone_from_halfspaces,
    contains,
    interior_ray,
    intersect,
    is_trivial,
)
from .linalg import IntVector, ZeroVectorError
from .polytope import Polytope, Support, build_polytope, edges_touching_face, support_face

log = logging.getLogger(__name__)


class PruneMode(str, Enum):
    NAIVE = "naive"
    VERTICAL = "vertical"
    HORIZONTAL = "horizontal"


@dataclass
class LevelStats:
    level: int
    intersections: int = 0
    containments: int = 0

    @property
    def sum(self) -> int:
        return self.intersections + self.containments

    def to_json(self) -> dict:
        return {"level": self.level, "intersections": self.intersections,
                "containments": self.containments, "sum": self.sum}


@dataclass
class PruneStats:
    per_level: list[LevelStats] = field(default_factory=list)

    @property
    def intersections(self) -> int:
        return sum(s.intersections for s in self.per_level)

    @property
    def containments(self) -> int:
        return sum(s.containments for s in self.per_level)

    @property
    def sum(self) -> int:
        return self.intersections + self.containments

    def to_json(self) -> dict:
        return {"intersections": self.intersections, "containments": self.containments,
                "sum": self.sum, "per_level": [s.to_json() for s in self.per_level]}


@dataclass
class PretropismReport:
    cones: list[Cone]
    rays: list[IntVector]
    validated: list[bool]
    stats: PruneStats
    mode: PruneMode
    lower_hull: bool = False

    @property
    def validated_rays(self) -> list[IntVector]:
        return [r for r, ok in zip(self.rays, self.validated) if ok]

    def to_json(self) -> dict:
        return {"mode": self.mode.value, "lower_hull": self.lower_hull,
                "rays": [list(r) for r in self.rays], "validated": list(self.validated),
                "cones": [c.to_json() for c in self.cones], "stats": self.stats.to_json()}


def explore_edge_skeleton(p: Polytope, c: Cone, seed: int | str = 0, *,
                          containment: bool = True, walk: bool = True):
    """Cones ``c & N(E)`` over the edges E of ``p`` whose normal cone meets ``c``.

    Starting from the edges touching the face of ``p`` selected by an interior
    ray of ``c``, neighbors of every edge that produced a cone are queued.
    With ``containment`` a cone ``c`` already inside ``N(E)`` is taken as is
    without intersecting. With ``walk=False`` every edge is tested.

    Returns ``(cones, intersections, containments)``; cones are deduplicated
    and sorted by key.
    """
    if is_trivial(c):
        raise EmptyConeError()
    if not p.edges:
        return [], 0, 0
    n_int = n_con = 0
    if walk:
        face = support_face(p, interior_ray(c, seed))
        queue = deque(sorted(edges_touching_face(p, face)))
    else:
        queue = deque(range(len(p.edges)))
    queued = set(queue)
    found: dict = {}
    while queue:
        edge = p.edges[queue.popleft()]
        cone_e = edge.normal_cone
        if containment and contains(cone_e, c):
            n_con += 1
            add = c
        else:
            n_int += 1
            add = intersect(c, cone_e)
            if is_trivial(add):
                add = None
        if add is not None:
            found.setdefault(add.key, add)
            if walk:
                for nb in sorted(edge.neighbor_edge_ids):
                    if nb not in queued:
                        queued.add(nb)
                        queue.append(nb)
    return [found[k] for k in sorted(found)], n_int, n_con


def horizontal_prune(cones: Sequence[Cone], contained: bool = True) -> tuple[list[Cone], int]:
    """Drop duplicates and, if ``contained``, cones strictly inside another cone.

    Returns the survivors sorted by key and the number of cones removed.
    """
    unique: dict = {}
    for c in cones:
        unique.setdefault(c.key, c)
    if not contained:
        kept = sorted(unique.values(), key=lambda c: c.key)
        return kept, len(cones) - len(kept)
    ordered = sorted(unique.values(), key=lambda c: (-c.dim, c.key))
    kept: list[Cone] = []
    for c in ordered:
        if not any(d.dim >= c.dim and contains(d, c) for d in kept):
            kept.append(c)
    kept.sort(key=lambda c: c.key)
    return kept, len(cones) - len(kept)


def validate_pretropism(polytopes: Sequence[Polytope], r: Sequence[int]) -> bool:
    """True iff ``r`` selects a face of dimension at least one on every polytope."""
    if not any(r):
        raise ZeroVectorError()
    return all(support_face(p, r).dim >= 1 for p in polytopes)


_WORKER_STATE: dict = {}


def _init_worker(polytopes, containment, walk):
    _WORKER_STATE["polytopes"] = polytopes
    _WORKER_STATE["flags"] = (containment, walk)


def _explore_task(args):
    level, cone, seed = args
    containment, walk = _WORKER_STATE["flags"]
    return explore_edge_skeleton(_WORKER_STATE["polytopes"][level], cone, seed,
                                 containment=containment, walk=walk)


def _coerce(polytopes) -> list[Polytope]:
    out = []
    for p in polytopes:
        out.append(p if isinstance(p, Polytope) else build_polytope(p))
    return out


def find_pretropisms(polytopes: Sequence[Polytope | Support], mode: PruneMode | str = PruneMode.HORIZONTAL,
                     lower_hull: bool = False, seed: int = 0, workers: int = 1,
                     prune_contained: bool = False) -> PretropismReport:
    """Enumerate the cones of common inner normals to edges of all polytopes.

    NAIVE intersects every cone with the normal cone of every edge of the next
    polytope. VERTICAL walks the edge skeleton, takes the containment shortcut
    and only discards empty intersections. HORIZONTAL also removes duplicate
    cones at every level, and with ``prune_contained`` every cone strictly
    contained in another one as well.

    With ``lower_hull`` the search is restricted to ``x_1 >= 0`` and only rays
    with a positive first coordinate are reported.
    """
    mode = PruneMode(mode)
    polys = _coerce(polytopes)
    if len(polys) < 2:
        raise ValueError("at least two polytopes are required")
    dim = polys[0].ambient_dim
    if any(p.ambient_dim != dim for p in polys):
        raise DimensionMismatchError("polytopes live in different ambient dimensions")
    if workers < 1:
        raise ValueError("workers must be >= 1")
    containment = mode is not PruneMode.NAIVE
    walk = mode is not PruneMode.NAIVE

    cones = [e.normal_cone for e in polys[0].edges]
    if lower_hull:
        upper = cone_from_halfspaces(dim, [(1,) + (0,) * (dim - 1)])
        cones = [c for c in (intersect(e, upper) for e in cones) if not is_trivial(c)]
    cones.sort(key=lambda c: c.key)

    stats = PruneStats()
    pool = None
    if workers > 1:
        pool = ProcessPoolExecutor(workers, initializer=_init_worker,
                                   initargs=(polys, containment, walk))
    try:
        for level in range(1, len(polys)):
            tasks = [(level, c, f"{seed}:{level}:{i}") for i, c in enumerate(cones)]
            if pool is None:
                results = [explore_edge_skeleton(polys[level], c, s, containment=containment, walk=walk)
                           for _, c, s in tasks]
            else:
                chunk = max(1, len(tasks) // (4 * workers))
                results = list(pool.map(_explore_task, tasks, chunksize=chunk))
            lvl = LevelStats(level + 1)
            new: list[Cone] = []
            for found, n_int, n_con in results:
                new.extend(found)
                lvl.intersections += n_int
                lvl.containments += n_con
            stats.per_level.append(lvl)
            if mode is PruneMode.HORIZONTAL:
                new, _ = horizontal_prune(new, contained=prune_contained)
            else:
                new.sort(key=lambda c: c.key)
            log.debug("level %d: %d cones, %d intersections, %d containments",
                      level + 1, len(new), lvl.intersections, lvl.containments)
            cones = new
            if not cones:
                break
    finally:
        if pool is not None:
            pool.shutdown()

    rays: set[IntVector] = set()
    for c in cones:
        rays.update(c.generating_rays())
    if lower_hull:
        rays = {r for r in rays if r[0] > 0}
    ray_list = sorted(rays)
    validated = [validate_pretropism(polys, r) for r in ray_list]
    final = list({c.key: c for c in cones}.values())
    return PretropismReport(final, ray_list, validated, stats, mode, lower_hull)
