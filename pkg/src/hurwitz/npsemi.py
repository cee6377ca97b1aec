"""Upward-closed (non-perforated) subsemigroups of Z^m_{>=0}.

Such a subsemigroup is determined by its finite antichain of minimal points
(its origins): it is the union of the shifted cones ``point + Z^m_{>=0}``.
Origins make equality, membership, union and intersection easy.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = ["OriginSet", "dominates", "intersect", "member", "origins", "union"]

LatticePoint = "tuple[int, ...]"


def dominates(a: Sequence[int], b: Sequence[int]) -> bool:
    """Coordinatewise a >= b."""
    return all(x >= y for x, y in zip(a, b))


def _as_point(point: Sequence[int], dimension: int) -> tuple[int, ...]:
    point = tuple(int(x) for x in point)
    if len(point) != dimension:
        raise ValueError(f"dimension mismatch: {point} is not {dimension}-dimensional")
    if any(x < 0 for x in point):
        raise ValueError(f"negative coordinate in {point}")
    return point


@dataclass(frozen=True)
class OriginSet:
    """The upward closure of a finite antichain of lattice points."""

    dimension: int
    points: frozenset

    def __post_init__(self) -> None:
        points = frozenset(_as_point(p, self.dimension) for p in self.points)
        for a in points:
            for b in points:
                if a != b and dominates(a, b):
                    raise ValueError(f"{a} dominates {b}: not an antichain")
        object.__setattr__(self, "points", points)

    def sorted_points(self) -> list[tuple[int, ...]]:
        return sorted(self.points)


def origins(generators: Iterable[Sequence[int]]) -> OriginSet:
    """Minimal antichain of a generating set: drop every point that
    coordinatewise dominates another.

    >>> origins([(1, 0), (2, 1), (0, 2)]).sorted_points()
    [(0, 2), (1, 0)]
    """
    generators = [tuple(int(x) for x in g) for g in generators]
    if not generators:
        raise ValueError("need at least one generator")
    dimension = len(generators[0])
    generators = [_as_point(g, dimension) for g in generators]
    minimal = [
        g
        for g in set(generators)
        if not any(h != g and dominates(g, h) for h in generators)
    ]
    return OriginSet(dimension, frozenset(minimal))


def member(s: OriginSet, point: Sequence[int]) -> bool:
    """Whether ``point`` lies in the upward closure of ``s``.

    >>> member(origins([(1, 1)]), (3, 1))
    True
    >>> member(origins([(1, 0), (0, 2)]), (0, 1))
    False
    """
    point = _as_point(point, s.dimension)
    return any(dominates(point, origin) for origin in s.points)


def union(a: OriginSet, b: OriginSet) -> OriginSet:
    if a.dimension != b.dimension:
        raise ValueError(f"dimension mismatch: {a.dimension} != {b.dimension}")
    return origins(list(a.points) + list(b.points))


def intersect(a: OriginSet, b: OriginSet) -> OriginSet:
    """Intersection: minimal coordinatewise maxima of origin pairs.

    >>> intersect(origins([(2, 0), (0, 2)]), origins([(1, 1)])).sorted_points()
    [(1, 2), (2, 1)]
    """
    if a.dimension != b.dimension:
        raise ValueError(f"dimension mismatch: {a.dimension} != {b.dimension}")
    maxima = [
        tuple(max(x, y) for x, y in zip(p, q)) for p in a.points for q in b.points
    ]
    return origins(maxima)
