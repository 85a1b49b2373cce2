"""Exact polyhedral cones with both generator and halfspace descriptions.

A cone is stored as its lineality space (canonical basis), its extreme rays
reduced modulo the lineality space, a list of facet-defining halfspaces
``<x, h> >= 0`` and a canonical basis of the equalities ``<x, e> = 0`` that cut
out its linear span. Conversions use an incremental double description
method over the integers.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .linalg import (
    IntVector,
    dot,
    nullspace_basis,
    pivot_columns,
    primitive,
    reduce_modulo,
    row_basis,
)


class DimensionMismatchError(ValueError):
    pass


class EmptyConeError(ValueError):
    def __init__(self, message: str = "EmptyCone"):
        super().__init__(message)


class ConeKey(NamedTuple):
    """Canonical, totally ordered encoding of a cone as a point set."""

    ambient_dim: int
    rays: tuple[IntVector, ...]
    lineality: tuple[IntVector, ...]

    def encode(self) -> bytes:
        return repr(tuple(self)).encode()


@dataclass(frozen=True, eq=False)
class Cone:
    ambient_dim: int
    rays: tuple[IntVector, ...]
    lineality: tuple[IntVector, ...]
    halfspaces: tuple[IntVector, ...]
    equalities: tuple[IntVector, ...]
    key: ConeKey = field(repr=False)

    @property
    def dim(self) -> int:
        return self.ambient_dim - len(self.equalities)

    def __eq__(self, other):
        if not isinstance(other, Cone):
            return NotImplemented
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def generating_rays(self) -> list[IntVector]:
        """Extreme rays plus both orientations of each lineality generator."""
        out = list(self.rays)
        for l in self.lineality:
            out.append(l)
            out.append(tuple(-x for x in l))
        return out

    def to_json(self) -> dict:
        return {"rays": [list(r) for r in self.rays],
                "lineality": [list(l) for l in self.lineality]}


def _check_dims(dim: int, vectors: Sequence[Sequence[int]]) -> None:
    for v in vectors:
        if len(v) != dim:
            raise DimensionMismatchError(
                f"vector {tuple(v)} does not have ambient dimension {dim}")


class _DDState:
    """Mutable working state of the double description method.

    ``rays`` are extreme rays of the pointed part, ``masks[i]`` is the bitmask
    of halfspace indices tight at ``rays[i]``.
    """

    __slots__ = ("lineality", "rays", "masks", "halfspaces")

    def __init__(self, lineality, rays, halfspaces):
        self.lineality = [tuple(l) for l in lineality]
        self.rays = [tuple(r) for r in rays]
        self.halfspaces = [tuple(h) for h in halfspaces]
        masks = []
        for r in self.rays:
            m = 0
            for j, h in enumerate(self.halfspaces):
                if not dot(h, r):
                    m |= 1 << j
            masks.append(m)
        self.masks = masks

    def add(self, h: IntVector, equality: bool = False) -> None:
        lin = self.lineality
        j = len(self.halfspaces)
        bit = 1 << j
        for idx, l in enumerate(lin):
            s = dot(h, l)
            if s:
                break
        else:
            idx = -1
        if idx >= 0:
            l0 = lin[idx]
            if s < 0:
                l0 = tuple(-x for x in l0)
                s = -s
            new_lin = []
            for k, l in enumerate(lin):
                if k == idx:
                    continue
                t = dot(h, l)
                new_lin.append(primitive([s * a - t * b for a, b in zip(l, l0)]) if t else l)
            self.lineality = new_lin
            new_rays = []
            for r in self.rays:
                t = dot(h, r)
                new_rays.append(primitive([s * a - t * b for a, b in zip(r, l0)]) if t else r)
            self.rays = new_rays
            if equality:
                return
            self.masks = [m | bit for m in self.masks]
            self.rays.append(primitive(l0))
            self.masks.append(bit - 1)
            self.halfspaces.append(h)
            return

        rays, masks = self.rays, self.masks
        vals = [dot(h, r) for r in rays]
        pos = [i for i, v in enumerate(vals) if v > 0]
        neg = [i for i, v in enumerate(vals) if v < 0]
        if not neg and (not equality or not pos):
            if not equality:
                self.masks = [m | bit if not v else m for m, v in zip(masks, vals)]
                self.halfspaces.append(h)
            return

        new_rays = []
        new_masks = []
        if pos and neg:
            nrays = len(rays)
            for p in pos:
                mp = masks[p]
                vp = vals[p]
                rp = rays[p]
                for n in neg:
                    common = mp & masks[n]
                    adjacent = True
                    for w in range(nrays):
                        if w != p and w != n and masks[w] & common == common:
                            adjacent = False
                            break
                    if not adjacent:
                        continue
                    vn = vals[n]
                    rn = rays[n]
                    new_rays.append(primitive([vp * a - vn * b for a, b in zip(rn, rp)]))
                    new_masks.append(common if equality else common | bit)
        zero = [i for i, v in enumerate(vals) if not v]
        if equality:
            self.rays = [rays[i] for i in zero] + new_rays
            self.masks = [masks[i] for i in zero] + new_masks
            return
        self.rays = ([rays[i] for i in pos] + [rays[i] for i in zero] + new_rays)
        self.masks = ([masks[i] for i in pos] + [masks[i] | bit for i in zero] + new_masks)
        self.halfspaces.append(h)

    def finish(self, dim: int) -> Cone:
        lineality = row_basis(self.lineality)
        pivots = pivot_columns(lineality)
        rays = self.rays
        if lineality:
            rays = [primitive(reduce_modulo(r, lineality, pivots)) for r in rays]
        order = sorted(range(len(rays)), key=lambda i: rays[i])
        sorted_rays = tuple(rays[i] for i in order)
        masks = [self.masks[i] for i in order]

        halfspaces: list[IntVector] = []
        if sorted_rays:
            full = (1 << len(sorted_rays)) - 1
            # tight-ray set of every halfspace, as a bitmask over rays
            tight: dict[int, int] = {}
            for j, h in enumerate(self.halfspaces):
                bit = 1 << j
                s = 0
                for i, m in enumerate(masks):
                    if m & bit:
                        s |= 1 << i
                if s != full and s not in tight:
                    tight[s] = j
            sets = list(tight)
            for s in sets:
                if any(t != s and t & s == s for t in sets):
                    continue
                halfspaces.append(self.halfspaces[tight[s]])
            halfspaces.sort()
        equalities = nullspace_basis(list(sorted_rays) + lineality, dim)
        key = ConeKey(dim, sorted_rays, tuple(lineality))
        return Cone(dim, sorted_rays, tuple(lineality), tuple(halfspaces),
                    tuple(equalities), key)


def _identity(dim: int) -> list[IntVector]:
    return [tuple(int(i == j) for j in range(dim)) for i in range(dim)]


def cone_from_halfspaces(ambient_dim: int, halfspaces: Sequence[Sequence[int]] = (),
                         equalities: Sequence[Sequence[int]] = ()) -> Cone:
    """Cone ``{x : <x, h> >= 0 for h in halfspaces, <x, e> = 0 for e in equalities}``."""
    _check_dims(ambient_dim, halfspaces)
    _check_dims(ambient_dim, equalities)
    state = _DDState(_identity(ambient_dim), (), ())
    for e in equalities:
        if any(e):
            state.add(tuple(e), equality=True)
    for h in halfspaces:
        if any(h):
            state.add(tuple(h))
    return state.finish(ambient_dim)


def cone_from_generators(rays: Sequence[Sequence[int]] = (),
                         lineality: Sequence[Sequence[int]] = (),
                         ambient_dim: int | None = None) -> Cone:
    """Cone generated by nonnegative combinations of ``rays`` plus ``lineality``."""
    if ambient_dim is None:
        src = list(rays) or list(lineality)
        if not src:
            raise ValueError("ambient_dim is required without generators")
        ambient_dim = len(src[0])
    _check_dims(ambient_dim, rays)
    _check_dims(ambient_dim, lineality)
    # H-description of the cone = generators of its dual cone
    dual = cone_from_halfspaces(ambient_dim, rays, lineality)
    return cone_from_halfspaces(ambient_dim, dual.generating_rays())


def zero_cone(ambient_dim: int) -> Cone:
    return cone_from_halfspaces(ambient_dim, (), _identity(ambient_dim))


def full_space(ambient_dim: int) -> Cone:
    return cone_from_halfspaces(ambient_dim)


def _same_dim(a: Cone, b: Cone) -> None:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatchError(
            f"ambient dimensions differ: {a.ambient_dim} != {b.ambient_dim}")


def intersect(a: Cone, b: Cone) -> Cone:
    """Point-set intersection, by adding the constraints of ``b`` to ``a``."""
    _same_dim(a, b)
    if len(b.rays) + len(b.lineality) < len(a.rays) + len(a.lineality):
        a, b = b, a
    state = _DDState(a.lineality, a.rays, a.halfspaces)
    for e in b.equalities:
        state.add(e, equality=True)
        if not state.rays and not state.lineality:
            return state.finish(a.ambient_dim)
    for h in b.halfspaces:
        state.add(h)
        if not state.rays and not state.lineality:
            break
    return state.finish(a.ambient_dim)


def contains(outer: Cone, inner: Cone) -> bool:
    """True iff every generator of ``inner`` satisfies the constraints of ``outer``."""
    _same_dim(outer, inner)
    hs, eqs = outer.halfspaces, outer.equalities
    for r in inner.rays:
        for e in eqs:
            if dot(e, r):
                return False
        for h in hs:
            if dot(h, r) < 0:
                return False
    for l in inner.lineality:
        for e in eqs:
            if dot(e, l):
                return False
        for h in hs:
            if dot(h, l):
                return False
    return True


def contains_point(c: Cone, x: Sequence[int]) -> bool:
    if any(dot(e, x) for e in c.equalities):
        return False
    return all(dot(h, x) >= 0 for h in c.halfspaces)


def is_trivial(c: Cone) -> bool:
    return not c.rays and not c.lineality


def cone_key(c: Cone) -> ConeKey:
    return c.key


def interior_ray(c: Cone, seed: int | str = 0) -> IntVector:
    """A primitive lattice vector in the relative interior of ``c``.

    Strictly positive random weights on the extreme rays plus nonzero random
    weights on the lineality basis; deterministic for a given seed.
    """
    if is_trivial(c):
        raise EmptyConeError()
    if len(c.rays) + len(c.lineality) == 1:
        return (c.rays or c.lineality)[0]
    rng = random.Random(seed)
    v = [0] * c.ambient_dim
    for r in c.rays:
        w = rng.randint(1, 9)
        for i, x in enumerate(r):
            v[i] += w * x
    for l in c.lineality:
        w = rng.choice((-3, -2, -1, 1, 2, 3))
        for i, x in enumerate(l):
            v[i] += w * x
    return primitive(v)
