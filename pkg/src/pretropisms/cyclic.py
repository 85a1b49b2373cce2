"""Supports of the cyclic n-roots system and its reduced form."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .linalg import IntVector, ZeroVectorError
from .polytope import Support


@dataclass(frozen=True)
class CyclicSystem:
    n: int
    supports: tuple[Support, ...]
    reduced: bool


def _check_n(n: int) -> None:
    if n < 3:
        raise ValueError(f"cyclic n-roots needs n >= 3, got {n}")


def window(n: int, start: int, length: int) -> IntVector:
    """Indicator vector of ``{start, ..., start + length - 1} mod n``."""
    v = [0] * n
    for k in range(start, start + length):
        v[k % n] = 1
    return tuple(v)


def cyclic_supports(n: int) -> CyclicSystem:
    """Equation k < n is the sum of all products of k cyclically consecutive
    variables; equation n is ``x_0 x_1 ... x_{n-1} - 1``."""
    _check_n(n)
    supports = [Support.from_points((window(n, j, k) for j in range(n)), n) for k in range(1, n)]
    supports.append(Support.from_points([(1,) * n, (0,) * n], n))
    return CyclicSystem(n, tuple(supports), reduced=False)


def reduced_cyclic_supports(n: int) -> CyclicSystem:
    """First n-1 equations after ``x_i = y_i / y_0`` with denominators cleared.

    Equation k is homogeneous of degree k, so multiplying through by ``y_0^k``
    is the same as setting ``x_0 = 1``: drop coordinate 0 from every exponent.
    """
    _check_n(n)
    supports = [Support.from_points((window(n, j, k)[1:] for j in range(n)), n - 1)
                for k in range(1, n)]
    return CyclicSystem(n, tuple(supports), reduced=True)


def lift_pretropism(v: Sequence[int]) -> IntVector:
    """Map a reduced pretropism to the full system (first coordinate zero).

    Every full support lies on a hyperplane ``sum(a) = k``, so the all-ones
    direction is in every normal cone and ``(0, v)`` is the class
    representative with vanishing first coordinate.
    """
    if not any(v):
        raise ZeroVectorError()
    return (0,) + tuple(v)
