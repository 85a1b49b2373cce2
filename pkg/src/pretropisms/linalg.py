"""Exact integer linear algebra on tuples of Python ints.

Vectors are plain tuples of ints and matrices are sequences of such tuples.
Elimination is fraction-free: rows are combined by cross multiplication and
divided by their content after every step, so entries stay small and no
rational arithmetic is ever needed.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, Sequence

IntVector = tuple[int, ...]


class ZeroVectorError(ValueError):
    """Raised when an operation needs a nonzero vector."""

    def __init__(self, message: str = "ZeroVector"):
        super().__init__(message)


def dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


def content(v: Sequence[int]) -> int:
    g = 0
    for x in v:
        if x:
            g = gcd(g, x)
            if g == 1:
                return 1
    return g


def primitive(v: Sequence[int]) -> IntVector:
    """Return ``v`` divided by the gcd of its entries.

    >>> primitive((2, 4, -6))
    (1, 2, -3)
    """
    g = content(v)
    if g == 0:
        raise ZeroVectorError()
    if g == 1:
        return tuple(v)
    return tuple(x // g for x in v)


def is_primitive(v: Sequence[int]) -> bool:
    return content(v) == 1


def sign_normalized(v: Sequence[int]) -> IntVector:
    """Flip ``v`` so its first nonzero entry is positive."""
    for x in v:
        if x:
            return tuple(v) if x > 0 else tuple(-y for y in v)
    return tuple(v)


def _echelon(rows: Iterable[Sequence[int]]) -> tuple[list[list[int]], list[int]]:
    """Fraction-free Gauss-Jordan elimination.

    Returns the nonzero reduced rows and their pivot columns. Every pivot is
    positive, every row is primitive and pivot columns are zero outside their
    own row, which makes the output a canonical basis of the row space.
    """
    work = [list(r) for r in rows if any(r)]
    if not work:
        return [], []
    ncols = len(work[0])
    basis: list[list[int]] = []
    pivots: list[int] = []
    for col in range(ncols):
        sel = None
        for i, r in enumerate(work):
            if r[col]:
                sel = i
                break
        if sel is None:
            continue
        prow = work.pop(sel)
        if prow[col] < 0:
            prow = [-x for x in prow]
        g = content(prow)
        if g > 1:
            prow = [x // g for x in prow]
        p = prow[col]
        remaining = []
        for r in work:
            f = r[col]
            if f:
                r = [p * x - f * y for x, y in zip(r, prow)]
                g = content(r)
                if g == 0:
                    continue
                if g > 1:
                    r = [x // g for x in r]
            remaining.append(r)
        work = remaining
        for k, b in enumerate(basis):
            f = b[col]
            if f:
                b = [p * x - f * y for x, y in zip(b, prow)]
                if b[pivots[k]] < 0:
                    b = [-x for x in b]
                g = content(b)
                if g > 1:
                    b = [x // g for x in b]
                basis[k] = b
        basis.append(prow)
        pivots.append(col)
        if not work:
            break
    return basis, pivots


def rank(rows: Sequence[Sequence[int]]) -> int:
    """Row rank computed by fraction-free elimination."""
    work = [list(r) for r in rows if any(r)]
    r = 0
    if not work:
        return 0
    ncols = len(work[0])
    for col in range(ncols):
        sel = None
        for i in range(r, len(work)):
            if work[i][col]:
                sel = i
                break
        if sel is None:
            continue
        work[r], work[sel] = work[sel], work[r]
        prow = work[r]
        p = prow[col]
        for i in range(r + 1, len(work)):
            f = work[i][col]
            if f:
                row = [p * x - f * y for x, y in zip(work[i], prow)]
                g = content(row)
                work[i] = [x // g for x in row] if g > 1 else row
        r += 1
        if r == len(work):
            break
    return r


def row_basis(rows: Sequence[Sequence[int]]) -> list[IntVector]:
    """Canonical primitive basis of the row space (reduced echelon form)."""
    basis, _ = _echelon(rows)
    return [tuple(b) for b in basis]


def nullspace_basis(rows: Sequence[Sequence[int]], ncols: int | None = None) -> list[IntVector]:
    """Canonical primitive integer basis of ``{x : M x = 0}``.

    ``ncols`` is required when ``rows`` is empty. The returned rows are the
    reduced echelon form of the nullspace, scaled to primitive integers with
    positive pivots.
    """
    if ncols is None:
        if not rows:
            raise ValueError("ncols is required for an empty matrix")
        ncols = len(rows[0])
    basis, pivots = _echelon(rows)
    pivot_set = set(pivots)
    vectors = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        # x_free = L, x_pivot = -row[free] * L / row[pivot]
        lcm = 1
        for b, pc in zip(basis, pivots):
            if b[free]:
                lcm = lcm * b[pc] // gcd(lcm, b[pc])
        x = [0] * ncols
        x[free] = lcm
        for b, pc in zip(basis, pivots):
            if b[free]:
                x[pc] = -b[free] * lcm // b[pc]
        vectors.append(x)
    return row_basis(vectors)


def reduce_modulo(v: Sequence[int], basis: Sequence[Sequence[int]], pivots: Sequence[int]) -> list[int]:
    """Clear the pivot coordinates of ``v`` using an echelon ``basis``.

    Only positive multiples of ``v`` are taken, so the direction of ``v``
    modulo the span of ``basis`` is preserved.
    """
    out = list(v)
    for b, pc in zip(basis, pivots):
        f = out[pc]
        if f:
            p = b[pc]
            out = [p * x - f * y for x, y in zip(out, b)]
    return out


def pivot_columns(basis: Sequence[Sequence[int]]) -> list[int]:
    cols = []
    for b in basis:
        for i, x in enumerate(b):
            if x:
                cols.append(i)
                break
    return cols


def affine_rank(points: Sequence[Sequence[int]]) -> int:
    """Dimension of the affine hull of ``points`` (-1 for no points)."""
    if not points:
        return -1
    base = points[0]
    return rank([tuple(a - b for a, b in zip(p, base)) for p in points[1:]])
